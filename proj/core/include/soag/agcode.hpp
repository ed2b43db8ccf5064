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

#ifndef SOAG_AGCODE_HPP
#define SOAG_AGCODE_HPP

#include <optional>
#include <vector>

#include "soag/curve.hpp"
#include "soag/linalg.hpp"

namespace soag {

/// One reduced monomial x^i y^j (j < deg F) with its pole order at P_infty.
struct BasisMonomial {
    long long i = 0;
    long long j = 0;
    long long pole = 0;  ///< i*deg F + j*deg H
};

/// Monomial basis of L(m P_infty): all (i,j), 0 <= j < deg F, with pole
/// order <= m, sorted by (pole, j). Pole orders are pairwise distinct since
/// gcd(deg F, deg H) = 1.
using MonomialBasis = std::vector<BasisMonomial>;

MonomialBasis rr_basis(const CurveSpec& spec, long long m);

struct AGCode {
    const CurveSpec* curve = nullptr;
    long long m = 0;
    MonomialBasis basis;
    FqMatrix genmat;         ///< |basis| x N, entry = a^i b^j at point (a,b)
    std::size_t dim = 0;     ///< rank of genmat
    long long N = 0;
};

/// Evaluation code C(D, m P_infty); throws matrix_gate when |basis| or N
/// exceed the verification gate.
AGCode build_code(const CurveSpec& spec, const TransversalData& td, long long m);

struct DesignedParams {
    long long N = 0;
    long long primal_dim = 0;  ///< m - g + 1
    long long primal_d_lb = 0; ///< N - m
    long long dual_dim = 0;    ///< N - m + g - 1
    long long dual_d_lb = 0;   ///< m - 2g + 2
};

/// Pure arithmetic on (N, g, m); requires 2g-2 < m < N (MOutOfRange).
DesignedParams designed_params(const CurveSpec& spec, const TransversalData& td, long long m);
DesignedParams designed_params_raw(long long N, long long g, long long m);

/// All self-orthogonality bounds on m, with provenance.
struct SORanges {
    long long m_max_exact = 0;   ///< floor((2g-2+N-degM)/2)
    long long m_max_coarse = 0;  ///< floor((2g-2+degF)/2)
    std::optional<long long> m_max_hermitian_exact;   ///< floor((2g-2+N-degM)/(q0+1))
    std::optional<long long> m_max_hermitian_coarse;  ///< floor((2g-2+degF)/(q0+1))
    std::optional<std::uint64_t> q0;
    std::optional<long long> m_max_family;  ///< closed-form family bound
    std::optional<long long> paper_quoted_m_max;
};

/// q0 defaults to sqrt(|K|) when that is a perfect square; passing q0
/// explicitly against a non-square field throws hermitian_unavailable.
SORanges so_ranges(const CurveSpec& spec, const TransversalData& td,
                   std::optional<std::uint64_t> q0 = {}, const FamilyDesc* fd = nullptr);

/// Family/parameter-only variant: bounds from the closed forms alone.
SORanges so_ranges_family(const FamilyDesc& fd);

/// True iff the Gram matrix of the generator matrix vanishes.
bool check_so_euclidean(const AGCode& code);
bool check_so_hermitian(const AGCode& code, std::uint64_t q0);

/// Nullspace basis of the generator matrix (the dual code).
FqMatrix dual_code(const AGCode& code);

/// Exact minimum Hamming weight by full codeword enumeration;
/// requires q^dim <= cap (TooManyCodewords).
long long min_weight_exhaustive(const FqMatrix& genmat, std::uint64_t cap = 1ull << 24);

/// Smallest t <= wmax such that some t columns are linearly dependent
/// (t = d of the dual code when genmat generates the primal).
/// nullopt = none found up to wmax. wmax <= 4.
std::optional<int> min_dependent_columns(const FqMatrix& genmat, int wmax);

}  // namespace soag

#endif
