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

#ifndef SOAG_QUANTUM_HPP
#define SOAG_QUANTUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "soag/errors.hpp"

namespace soag {

enum class InnerProductFlavor { euclidean, hermitian };

/// [[N, k, >= d_lb]]_alphabet stabilizer-code parameters derived from a
/// self-orthogonal classical code (the caller certifies self-orthogonality).
struct QuantumParams {
    std::uint64_t alphabet = 0;
    long long N = 0;
    long long k = 0;
    long long d_lb = 1;
    bool pure = false;
    std::optional<bool> gv;  ///< unset = not evaluated / unsupported
};

/// CSS parameters: k = N - 2*dim_classical (NegativeK if that is negative).
/// `classical_d`, when known, feeds the generic purity criterion d > k+1.
QuantumParams css_params(long long N, long long dim_classical, long long d_dual_lb,
                         std::uint64_t alphabet, InnerProductFlavor flavor,
                         std::optional<long long> classical_d = {});

/// One-point designed parameters [[N, N-2(m-g+1), >= m-2g+2]], requiring
/// 2g-2 < m < N; purity from N > 2m-g+2.
QuantumParams one_point_qparams(long long N, long long g, long long m,
                                std::uint64_t alphabet = 0);

/// N > 2m - g + 2.
bool purity_check(long long N, long long g, long long m);
/// d > k + 1.
bool purity_generic(long long d, long long k);

/// Exact evaluation of the Gilbert-Varshamov exceedance inequality:
/// sum_{i=1}^{d-1} (q^2-1)^{i-1} C(N,i) >= (q^{N-k+2}-1)/(q^2-1)
/// for N > k >= 2, d >= 2, N == k (mod 2); for N odd, k = 1 the alternate
/// form applies. N even with k = 0 is Unsupported; other inputs throw
/// PreconditionViolated.
bool gv_check(std::uint64_t q_sym, long long N, long long k, long long d);

/// Both sides of the applicable GV inequality as decimal strings
/// (diagnostics; same preconditions as gv_check).
std::pair<std::string, std::string> gv_sides_decimal(std::uint64_t q_sym, long long N,
                                                     long long k, long long d);

struct JinXingBound {
    double value = 0.0;
    long long floor_value = 0;
    bool near_integer = false;  ///< within 1e-6 of an integer: floor may be off by one
};

/// N/2 * (1 - 1/N + log_q(1 - 1/q) - log_q 2); even q only
/// (NotApplicable for odd q).
JinXingBound jin_xing_bound(long long N, std::uint64_t q_sym);

}  // namespace soag

#endif
