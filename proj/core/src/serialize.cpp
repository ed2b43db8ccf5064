/*
   Copyright 2026 the soag authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "soag/serialize.hpp"

#include <json.hpp>

namespace soag {

using nlohmann::json;

namespace {

json field_to_obj(const Field& f) {
    json j;
    j["p"] = f.characteristic();
    j["m"] = f.degree();
    j["modulus"] = f.modulus();
    return j;
}

json poly_to_obj(const Poly& p) {
    json j;
    j["field"] = field_to_obj(*p.field());
    json coeffs = json::array();
    for (felem c : p.coeffs()) coeffs.push_back(p.field()->coeffs(c));
    j["coeffs"] = coeffs;
    return j;
}

felem coeff_from_json(const Field& f, const json& jc) {
    if (jc.is_number_integer()) return f.from_int(jc.get<std::int64_t>());
    if (jc.is_string()) return f.elem_from_text(jc.get<std::string>());
    if (jc.is_array()) {
        std::vector<std::uint32_t> cv = jc.get<std::vector<std::uint32_t>>();
        cv.resize(f.degree(), 0);
        return f.from_coeffs(cv);
    }
    fail(errc::parse_error, "polynomial coefficient must be int, string or array");
}

Poly poly_from_json_array(const FieldPtr& f, const json& arr) {
    if (!arr.is_array()) fail(errc::parse_error, "polynomial coefficients must be an array");
    std::vector<felem> c;
    c.reserve(arr.size());
    for (const auto& jc : arr) c.push_back(coeff_from_json(*f, jc));
    return Poly(f, std::move(c));
}

}  // namespace

std::string field_json(const Field& f) { return field_to_obj(f).dump(); }

std::string poly_json(const Poly& p) { return poly_to_obj(p).dump(); }

std::string curve_json(const CurveSpec& spec) {
    json j;
    j["field"] = {{"p", spec.K->characteristic()}, {"m", spec.K->degree()}};
    json fc = json::array(), hc = json::array();
    for (felem c : spec.F_poly.coeffs()) fc.push_back(spec.K->coeffs(c));
    for (felem c : spec.H_poly.coeffs()) hc.push_back(spec.K->coeffs(c));
    j["F"] = fc;
    j["H"] = hc;
    return j.dump();
}

std::string points_csv(const Field& f, const std::vector<AffinePoint>& pts) {
    std::string out;
    for (const auto& [x, y] : pts) {
        out += f.elem_text(x);
        out += ';';
        out += f.elem_text(y);
        out += '\n';
    }
    return out;
}

ParsedCurve parse_curve_source(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("bad curve JSON: ") + e.what());
    }
    if (!j.is_object()) fail(errc::parse_error, "curve source must be a JSON object");

    ParsedCurve out;
    if (j.contains("family")) {
        const std::string fam = j.at("family").get<std::string>();
        FamilyParams par;
        auto want = [&](const char* key) -> std::uint64_t {
            if (!j.contains(key))
                fail(errc::parse_error, std::string("family ") + fam + " needs \"" + key + "\"");
            return j.at(key).get<std::uint64_t>();
        };
        FamilyKind kind;
        if (fam == "A") {
            kind = FamilyKind::A;
            par.q = want("q");
            par.n = static_cast<unsigned>(want("n"));
            par.l = want("l");
        } else if (fam == "BHk") {
            kind = FamilyKind::B_Hk;
            par.q = want("q");
            par.k = static_cast<unsigned>(want("k"));
        } else if (fam == "B") {
            kind = FamilyKind::B_general;
            par.q = want("q");
            par.n = static_cast<unsigned>(want("n"));
            if (!j.contains("G")) fail(errc::parse_error, "family B needs \"G\"");
            // coefficients of G over the working field GF(q^n)
            auto [p, s] = prime_power_decompose(par.q);
            FieldPtr K = Field::make(p, s * par.n);
            for (const auto& jc : j.at("G"))
                par.G.push_back(K->coeffs(coeff_from_json(*K, jc)));
        } else if (fam == "C") {
            kind = FamilyKind::C;
            par.q = want("q");
            par.l = want("l");
        } else if (fam == "Cs") {
            kind = FamilyKind::C_s;
            par.q = want("q");
            par.s = static_cast<unsigned>(want("s"));
            par.l = want("l");
            par.n = static_cast<unsigned>(want("n"));
        } else {
            fail(errc::parse_error, "unknown family \"" + fam + "\"");
        }
        FamilyInstance inst = family_make(kind, par);
        out.curve = std::move(inst.curve);
        out.family = std::move(inst.desc);
        out.source_label = fam + "(q=" + std::to_string(par.q) +
                           (par.n ? ",n=" + std::to_string(par.n) : "") +
                           (par.l ? ",l=" + std::to_string(par.l) : "") +
                           (par.k ? ",k=" + std::to_string(par.k) : "") +
                           (par.s ? ",s=" + std::to_string(par.s) : "") + ")";
        return out;
    }

    if (!j.contains("field") || !j.contains("F") || !j.contains("H"))
        fail(errc::parse_error, "inline curve needs \"field\", \"F\" and \"H\"");
    const auto& jf = j.at("field");
    FieldPtr K = Field::make(jf.at("p").get<std::uint64_t>(), jf.at("m").get<unsigned>());
    Poly F = poly_from_json_array(K, j.at("F"));
    Poly H = poly_from_json_array(K, j.at("H"));
    out.curve = curve_validate(K, F, H);
    out.source_label = "F(y)=H(x) over GF(" + std::to_string(K->order()) + ")";
    return out;
}

}  // namespace soag
