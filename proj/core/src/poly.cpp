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

#include "soag/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace soag {

void Poly::check_same(const Poly& a, const Poly& b) {
    if (!a.f_ || !b.f_ || !a.f_->same(*b.f_))
        fail(errc::field_mismatch, "polynomials over different fields");
}

Poly Poly::monomial(FieldPtr f, std::uint64_t deg, felem coeff) {
    std::vector<felem> c(static_cast<std::size_t>(deg) + 1, 0);
    c.back() = coeff;
    return Poly(std::move(f), std::move(c));
}

Poly Poly::from_ints(const FieldPtr& f, std::initializer_list<std::int64_t> coeffs) {
    return from_ints(f, std::vector<std::int64_t>(coeffs));
}

Poly Poly::from_ints(const FieldPtr& f, const std::vector<std::int64_t>& coeffs) {
    std::vector<felem> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(f->from_int(v));
    return Poly(f, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    std::vector<felem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_->add(a.coeff(i), b.coeff(i));
    return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    std::vector<felem> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_->sub(a.coeff(i), b.coeff(i));
    return Poly(a.f_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    const auto& F = *a.f_;
    std::vector<felem> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.f_, std::move(c));
}

Poly Poly::operator-() const {
    std::vector<felem> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_->neg(c_[i]);
    return Poly(f_, std::move(c));
}

Poly Poly::scaled(felem s) const {
    std::vector<felem> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_->mul(c_[i], s);
    return Poly(f_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    Poly::check_same(a, b);
    return a.c_ == b.c_;
}

felem Poly::eval(felem x) const {
    felem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<felem> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(
                                      i % f_->characteristic())));
    return Poly(f_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    const auto& F = *a.f_;
    std::vector<felem> rem = a.c_;
    const long long db = b.degree();
    if (a.degree() < db) return {Poly(a.f_), a};
    std::vector<felem> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const felem lead_inv = F.inv(b.leading());
    for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(db);) {
        if (!rem[i]) continue;
        felem f = F.mul(rem[i], lead_inv);
        quot[i - db] = f;
        for (long long j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(f, b.c_[static_cast<std::size_t>(j)]));
    }
    return {Poly(a.f_, std::move(quot)), Poly(a.f_, std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
    check_same(a, b);
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

Poly Poly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(f_->inv(leading()));
}

Poly Poly::powmod(std::uint64_t e, const Poly& modpoly) const {
    check_same(*this, modpoly);
    if (modpoly.is_zero()) fail(errc::division_by_zero, "powmod modulus is zero");
    if (modpoly.degree() < 1) fail(errc::division_by_zero, "powmod modulus must have degree >= 1");
    Poly result = Poly::one(f_);
    Poly base = divmod(*this, modpoly).second;
    while (e) {
        if (e & 1) result = divmod(result * base, modpoly).second;
        base = divmod(base * base, modpoly).second;
        e >>= 1;
    }
    return result;
}

std::string Poly::text(char var) const {
    if (is_zero()) return "0";
    const auto& F = *f_;
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!out.empty()) out += " + ";
        std::string cs;
        if (c_[i] < F.characteristic()) {
            if (c_[i] != 1 || i == 0) cs = std::to_string(c_[i]);
        } else {
            cs = "(" + F.elem_text(c_[i]) + ")";
        }
        out += cs;
        if (i > 0) {
            if (!cs.empty()) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RootScan poly_roots(const Poly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "root scan of the zero polynomial");
    const auto& F = *f.field();
    if (F.order() > Field::kMaterializationCap)
        fail(errc::order_too_large, "field too large for exhaustive root scan");
    RootScan out;
    for (felem a = 0; a < F.order(); ++a)
        if (f.eval(a) == 0) out.roots.push_back(a);
    out.splits_with_distinct_roots =
        static_cast<long long>(out.roots.size()) == f.degree();
    return out;
}

Poly vanishing_poly(const FieldPtr& f, const std::vector<felem>& points) {
    std::unordered_set<felem> seen;
    for (auto a : points)
        if (!seen.insert(a).second) fail(errc::duplicate_point, "repeated point in vanishing set");
    // product of linear factors; coefficients built in place
    std::vector<felem> c{1};
    c.reserve(points.size() + 1);
    const auto& F = *f;
    for (auto a : points) {
        c.push_back(0);
        felem na = F.neg(a);
        for (std::size_t i = c.size(); i-- > 1;)
            c[i] = F.add(i > 0 ? F.mul(c[i], na) : 0, c[i - 1]);
        c[0] = F.mul(c[0], na);
    }
    return Poly(f, std::move(c));
}

Poly trace_poly(const Poly& G, std::uint64_t q, unsigned n) {
    const FieldPtr& f = G.field();
    // field order must be q^n
    std::uint64_t qn = 1;
    for (unsigned i = 0; i < n; ++i) qn *= q;
    if (qn != f->order()) fail(errc::not_a_subfield_tower, "trace_poly: field order != q^n");
    for (auto c : G.coeffs())
        if (c && !f->in_subfield(c, q))
            fail(errc::coefficients_not_in_subfield, "trace_poly: coefficient not in GF(q)");
    const std::uint64_t period = qn - 1;
    auto fold = [&](std::uint64_t e) -> std::uint64_t {
        if (e == 0) return 0;
        return (e - 1) % period + 1;
    };
    std::vector<felem> out(static_cast<std::size_t>(qn), 0);
    std::uint64_t qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < G.coeffs().size(); ++j) {
            felem c = G.coeff(j);
            if (!c) continue;
            std::uint64_t e = fold(static_cast<std::uint64_t>(j) * qi);
            out[static_cast<std::size_t>(e)] = f->add(out[static_cast<std::size_t>(e)], c);
        }
        qi *= q;
    }
    return Poly(f, std::move(out));
}

Poly poly_from_text(const FieldPtr& f, const std::string& s, char var) {
    std::vector<felem> coeffs;
    auto bump = [&](std::uint64_t deg, std::int64_t c) {
        if (coeffs.size() <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
        coeffs[static_cast<std::size_t>(deg)] =
            f->add(coeffs[static_cast<std::size_t>(deg)], f->from_int(c));
    };
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < n) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail(errc::parse_error, "expected +/- in polynomial text: " + s);
        }
        first = false;
        std::int64_t coef = 1;
        bool saw_digits = false;
        std::uint64_t num = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
            num = num * 10 + static_cast<std::uint64_t>(s[i] - '0');
            saw_digits = true;
            ++i;
        }
        if (saw_digits) coef = static_cast<std::int64_t>(num);
        skip_ws();
        if (i < n && s[i] == '*') {
            ++i;
            skip_ws();
        }
        std::uint64_t deg = 0;
        if (i < n && s[i] == var) {
            deg = 1;
            ++i;
            if (i < n && s[i] == '^') {
                ++i;
                std::uint64_t e = 0;
                bool any = false;
                while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    e = e * 10 + static_cast<std::uint64_t>(s[i] - '0');
                    any = true;
                    ++i;
                }
                if (!any) fail(errc::parse_error, "missing exponent in: " + s);
                deg = e;
            }
        } else if (!saw_digits) {
            fail(errc::parse_error, "bad term in polynomial text: " + s);
        }
        bump(deg, sign * coef);
        skip_ws();
    }
    return Poly(f, std::move(coeffs));
}

}  // namespace soag
