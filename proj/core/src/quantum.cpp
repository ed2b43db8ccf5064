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

#include "soag/quantum.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "soag/errors.hpp"

namespace soag {

using bignat = boost::multiprecision::cpp_int;

QuantumParams css_params(long long N, long long dim_classical, long long d_dual_lb,
                         std::uint64_t alphabet, InnerProductFlavor /*flavor*/,
                         std::optional<long long> classical_d) {
    QuantumParams qp;
    qp.alphabet = alphabet;
    qp.N = N;
    qp.k = N - 2 * dim_classical;
    if (qp.k < 0) fail(errc::negative_k, "N - 2k_classical is negative");
    qp.d_lb = d_dual_lb;
    qp.pure = classical_d ? purity_generic(*classical_d, dim_classical) : false;
    return qp;
}

QuantumParams one_point_qparams(long long N, long long g, long long m, std::uint64_t alphabet) {
    if (!(2 * g - 2 < m && m < N))
        fail(errc::m_out_of_range, "one-point parameters need 2g-2 < m < N");
    QuantumParams qp;
    qp.alphabet = alphabet;
    qp.N = N;
    qp.k = N - 2 * (m - g + 1);
    if (qp.k < 0) fail(errc::negative_k, "N - 2(m-g+1) is negative");
    qp.d_lb = m - 2 * g + 2;
    qp.pure = purity_check(N, g, m);
    return qp;
}

bool purity_check(long long N, long long g, long long m) { return N > 2 * m - g + 2; }

bool purity_generic(long long d, long long k) { return d > k + 1; }

namespace {

struct GvSides {
    bignat lhs, rhs;
};

// binomials built incrementally; the multiply/divide identity
// C(N,i+1)*(i+1) = C(N,i)*(N-i) is re-verified at every step
GvSides gv_sides(std::uint64_t q_sym, long long N, long long k, long long d) {
    if (q_sym < 2 || d < 2) fail(errc::precondition_violated, "gv_check needs q >= 2, d >= 2");
    const bignat q = q_sym;
    const bignat q2m1 = q * q - 1;
    GvSides out;
    if (N > k && k >= 2 && (N - k) % 2 == 0) {
        bignat binom = 1;
        bignat power = 1;  // (q^2-1)^{i-1}
        out.lhs = 0;
        for (long long i = 1; i <= d - 1; ++i) {
            bignat next = binom * (N - i + 1);
            if (next % i != 0) fail(errc::precondition_violated, "binomial recurrence broke");
            next /= i;
            if (next * i != binom * (N - i + 1))
                fail(errc::precondition_violated, "binomial identity violated");
            binom = next;
            out.lhs += power * binom;
            power *= q2m1;
        }
        bignat qpow = 1;
        for (long long i = 0; i < N - k + 2; ++i) qpow *= q;
        out.rhs = (qpow - 1) / q2m1;
        return out;
    }
    if (k == 1 && N % 2 == 1) {
        // alternate form: q^N + 1 on the right, the bracketed sum on the left
        bignat binom = 1;
        bignat powa = 1;                    // (q^2-1)^{i-1}
        bignat powb = 1;                    // (q+1)^{i-1}
        out.lhs = 0;
        for (long long i = 1; i <= d - 1; ++i) {
            binom = binom * (N - i + 1) / i;
            bignat bracket = q * powa + ((i % 2 == 1) ? powb : -powb);
            out.lhs += binom * bracket;
            powa *= q2m1;
            powb *= q + 1;
        }
        bignat qpow = 1;
        for (long long i = 0; i < N; ++i) qpow *= q;
        out.rhs = qpow + 1;
        return out;
    }
    if (k == 0 && N % 2 == 0)
        fail(errc::unsupported, "GV variant for N even, k = 0 is not available");
    fail(errc::precondition_violated, "gv_check needs N > k >= 2 with N == k mod 2, or N odd k = 1");
}

}  // namespace

bool gv_check(std::uint64_t q_sym, long long N, long long k, long long d) {
    GvSides s = gv_sides(q_sym, N, k, d);
    return s.lhs >= s.rhs;
}

std::pair<std::string, std::string> gv_sides_decimal(std::uint64_t q_sym, long long N,
                                                     long long k, long long d) {
    GvSides s = gv_sides(q_sym, N, k, d);
    return {s.lhs.str(), s.rhs.str()};
}

JinXingBound jin_xing_bound(long long N, std::uint64_t q_sym) {
    if (q_sym % 2 != 0)
        fail(errc::not_applicable, "the Jin-Xing bound applies to even q only");
    if (N < 1) fail(errc::precondition_violated, "jin_xing_bound needs N >= 1");
    const double q = static_cast<double>(q_sym);
    const double lq = std::log(q);
    const double value = static_cast<double>(N) / 2.0 *
                         (1.0 - 1.0 / static_cast<double>(N) +
                          std::log(1.0 - 1.0 / q) / lq - std::log(2.0) / lq);
    JinXingBound out;
    out.value = value;
    out.floor_value = static_cast<long long>(std::floor(value));
    out.near_integer = std::fabs(value - std::round(value)) < 1e-6;
    return out;
}

}  // namespace soag
