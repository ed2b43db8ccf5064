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

#ifndef SOAG_CURVE_HPP
#define SOAG_CURVE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soag/poly.hpp"

namespace soag {

/// A validated plane curve F(y) = H(x) over a working field K, with one
/// place at infinity. x has pole order deg(F) at P_infty, y has pole order
/// deg(H); the Weierstrass semigroup there is <deg F, deg H>.
struct CurveSpec {
    FieldPtr K;
    Poly F_poly;  ///< in y
    Poly H_poly;  ///< in x
    long long deg_f = 0;
    long long deg_h = 0;
    long long genus = 0;
};

/// Validation: F' a nonzero constant; gcd(char, deg H) = 1; one place at
/// infinity (deg H > deg F, or H = x^l monic with l < deg F, gcd(deg F,l)=1);
/// gcd(deg F, deg H) = 1; the curve is not a line. Genus from
/// (deg F - 1)(deg H - 1)/2.
CurveSpec curve_validate(const FieldPtr& K, const Poly& F_poly, const Poly& H_poly);

using AffinePoint = std::pair<felem, felem>;

/// All affine K-rational points, ordered by (x, y) in field enumeration order.
std::vector<AffinePoint> curve_points(const CurveSpec& spec);

/// The transversal set A, its points P_A, f_A and derivative, and deg(M).
/// A = { a : F(y) - H(a) has exactly deg F distinct roots in K }; with F'
/// a nonzero constant, full splitting is exactly F-transversality of the
/// vertical line x = a.
struct TransversalData {
    std::vector<felem> A;
    std::vector<AffinePoint> points;  ///< P_A, ordered by (x, y)
    long long N = 0;                  ///< deg(D) = |A| * deg F
    Poly f_A;
    Poly f_A_prime;
    long long deg_m = 0;  ///< deg(f'_A) * deg F
};

TransversalData transversal_data(const CurveSpec& spec);

enum class CurveType { type_i, type_ii };

/// Type I iff f'_A is a nonzero constant.
CurveType classify_type(const TransversalData& td);

/// Size of { l * Q^j mod modulus : j >= 0 }; requires 1 <= l < modulus.
unsigned cyclotomic_coset_size(std::uint64_t l, std::uint64_t Q, std::uint64_t modulus);

enum class FamilyKind { A, B_Hk, B_general, C, C_s };

const char* family_name(FamilyKind k) noexcept;

struct FamilyParams {
    std::uint64_t q = 0;
    unsigned n = 0;
    std::uint64_t l = 0;
    unsigned k = 0;
    unsigned s = 0;
    /// B_general only: coefficients of G, each an element coefficient tuple
    /// over the prime field of the working field GF(q^n).
    std::vector<std::vector<std::uint32_t>> G;
};

/// Closed-form predictions carried by a family instance. Everything here is
/// pure parameter arithmetic and works without materializing the field.
struct FamilyDesc {
    FamilyKind kind{};
    std::uint64_t p = 0;  ///< characteristic
    std::uint64_t q = 0;
    unsigned n = 0;
    std::uint64_t l = 0;
    unsigned k = 0;
    unsigned s = 0;

    std::uint64_t field_order = 0;  ///< |K|
    long long deg_f = 0;
    long long deg_h = 0;
    long long genus = 0;

    std::uint64_t e = 0;           ///< A and C families
    int mu = 0;                    ///< family-specific convention (see paper)
    std::uint64_t n_points = 0;    ///< predicted N
    long long deg_fa = 0;          ///< predicted deg f_A
    long long deg_fa_prime = 0;    ///< predicted deg f'_A
    long long deg_m = 0;           ///< predicted deg M
    std::string fa_form;           ///< human-readable closed form of f_A
    long long so_m_max = 0;        ///< family self-orthogonality bound on m
    std::optional<long long> paper_quoted_m_max;  ///< C_s: the paper's verbatim display
};

struct FamilyInstance {
    std::optional<CurveSpec> curve;  ///< materialized when |K| fits the cap
    FamilyDesc desc;
};

/// Validates the family hypotheses (HypothesisViolated on failure), fills the
/// predictions, and materializes the curve when the field fits the cap.
FamilyInstance family_make(FamilyKind kind, const FamilyParams& params);

struct PredictedCheckItem {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct PredictedCheck {
    std::vector<PredictedCheckItem> items;
    bool all_pass = true;
};

/// Compares computed transversal data against the family's closed forms.
PredictedCheck predicted_check(const CurveSpec& spec, const FamilyDesc& fd);

struct CastleStatus {
    long long s_min = 0;                       ///< multiplicity of the semigroup
    std::pair<long long, long long> gens;      ///< <deg F, deg H>
    long long gap_count = 0;                   ///< must equal the genus
    bool symmetric = false;
    bool castle_field_size = false;            ///< N + 1 == |K| * s_min + 1
    std::optional<bool> castle_family_count;   ///< N == q_family * s_min
    std::optional<bool> castle_family_predicate;  ///< closed-form claim (A / C / B_Hk)
    bool fiber_uniform = false;                ///< every a in A carries deg F points
};

CastleStatus castle_status(const CurveSpec& spec, const TransversalData& td,
                           const FamilyDesc* fd = nullptr);

}  // namespace soag

#endif
