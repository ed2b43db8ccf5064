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

#ifndef SOAG_SERIALIZE_HPP
#define SOAG_SERIALIZE_HPP

#include <optional>
#include <string>

#include "soag/agcode.hpp"
#include "soag/curve.hpp"

namespace soag {

/// {"p":..., "m":..., "modulus":[...]} (modulus ascending, monic).
std::string field_json(const Field& f);

/// {"field":{...}, "coeffs":[[c0...],[...],...]} ascending.
std::string poly_json(const Poly& p);

/// {"field":{"p":..,"m":..}, "F":[...], "H":[...]}.
std::string curve_json(const CurveSpec& spec);

/// Point list CSV: "x;y" per line, element text encoding.
std::string points_csv(const Field& f, const std::vector<AffinePoint>& pts);

/// A curve source: either an inline/validated curve or a family instance
/// (which may be parameter-only).
struct ParsedCurve {
    std::optional<CurveSpec> curve;
    std::optional<FamilyDesc> family;
    std::string source_label;  ///< compact description for report rows
};

/// Accepts {"field":{p,m},"F":[...],"H":[...]} with coefficients given as
/// integers (embedded mod p), "c0,c1,..." element text, or coefficient
/// arrays; or {"family":"A"|"BHk"|"B"|"C"|"Cs", ...}. Throws parse_error.
ParsedCurve parse_curve_source(const std::string& json_text);

}  // namespace soag

#endif
