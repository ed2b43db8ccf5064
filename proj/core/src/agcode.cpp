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

#include "soag/agcode.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace soag {

MonomialBasis rr_basis(const CurveSpec& spec, long long m) {
    MonomialBasis basis;
    if (m < 0) return basis;
    for (long long j = 0; j < spec.deg_f; ++j) {
        const long long base = j * spec.deg_h;
        if (base > m) continue;
        for (long long i = 0; base + i * spec.deg_f <= m; ++i)
            basis.push_back({i, j, base + i * spec.deg_f});
    }
    std::sort(basis.begin(), basis.end(), [](const BasisMonomial& a, const BasisMonomial& b) {
        return a.pole != b.pole ? a.pole < b.pole : a.j < b.j;
    });
    return basis;
}

AGCode build_code(const CurveSpec& spec, const TransversalData& td, long long m) {
    if (m < 0) fail(errc::m_out_of_range, "m must be nonnegative");
    AGCode code;
    code.curve = &spec;
    code.m = m;
    code.basis = rr_basis(spec, m);
    code.N = td.N;
    if (code.basis.size() > kMatrixGateRows ||
        static_cast<std::size_t>(td.N) > kMatrixGateCols)
        fail(errc::matrix_gate, "instance exceeds the matrix verification gate (" +
                                    std::to_string(code.basis.size()) + " x " +
                                    std::to_string(td.N) + ")");
    const auto& F = *spec.K;
    long long imax = 0, jmax = 0;
    for (const auto& b : code.basis) {
        imax = std::max(imax, b.i);
        jmax = std::max(jmax, b.j);
    }
    code.genmat = FqMatrix(spec.K, code.basis.size(), static_cast<std::size_t>(td.N));
    std::vector<felem> xp(static_cast<std::size_t>(imax) + 1), yp(static_cast<std::size_t>(jmax) + 1);
    for (std::size_t c = 0; c < td.points.size(); ++c) {
        const auto [a, b] = td.points[c];
        xp[0] = 1;
        for (long long i = 1; i <= imax; ++i)
            xp[static_cast<std::size_t>(i)] = F.mul(xp[static_cast<std::size_t>(i - 1)], a);
        yp[0] = 1;
        for (long long j = 1; j <= jmax; ++j)
            yp[static_cast<std::size_t>(j)] = F.mul(yp[static_cast<std::size_t>(j - 1)], b);
        for (std::size_t r = 0; r < code.basis.size(); ++r)
            code.genmat.at(r, c) = F.mul(xp[static_cast<std::size_t>(code.basis[r].i)],
                                         yp[static_cast<std::size_t>(code.basis[r].j)]);
    }
    code.dim = mat_rank(code.genmat);
    return code;
}

DesignedParams designed_params_raw(long long N, long long g, long long m) {
    if (!(2 * g - 2 < m && m < N))
        fail(errc::m_out_of_range, "designed parameters need 2g-2 < m < N");
    DesignedParams d;
    d.N = N;
    d.primal_dim = m - g + 1;
    d.primal_d_lb = N - m;
    d.dual_dim = N - m + g - 1;
    d.dual_d_lb = m - 2 * g + 2;
    return d;
}

DesignedParams designed_params(const CurveSpec& spec, const TransversalData& td, long long m) {
    return designed_params_raw(td.N, spec.genus, m);
}

namespace {

std::optional<std::uint64_t> square_root_order(const Field& F) {
    if (F.degree() % 2 != 0) return std::nullopt;
    std::uint64_t q0 = 1;
    for (unsigned i = 0; i < F.degree() / 2; ++i) q0 *= F.characteristic();
    return q0;
}

}  // namespace

SORanges so_ranges(const CurveSpec& spec, const TransversalData& td,
                   std::optional<std::uint64_t> q0, const FamilyDesc* fd) {
    SORanges r;
    const long long g = spec.genus;
    r.m_max_exact = floor_div(2 * g - 2 + td.N - td.deg_m, 2);
    r.m_max_coarse = floor_div(2 * g - 2 + spec.deg_f, 2);

    std::optional<std::uint64_t> q0eff = q0;
    if (!q0eff) q0eff = square_root_order(*spec.K);
    if (q0) {
        auto natural = square_root_order(*spec.K);
        if (!natural || *natural != *q0)
            fail(errc::hermitian_unavailable, "field order is not q0^2");
    }
    if (q0eff) {
        const long long d = static_cast<long long>(*q0eff) + 1;
        r.q0 = q0eff;
        r.m_max_hermitian_exact = floor_div(2 * g - 2 + td.N - td.deg_m, d);
        r.m_max_hermitian_coarse = floor_div(2 * g - 2 + spec.deg_f, d);
    }
    if (fd) {
        r.m_max_family = fd->so_m_max;
        r.paper_quoted_m_max = fd->paper_quoted_m_max;
    }
    return r;
}

SORanges so_ranges_family(const FamilyDesc& fd) {
    SORanges r;
    const long long g = fd.genus;
    const long long N = static_cast<long long>(fd.n_points);
    r.m_max_exact = floor_div(2 * g - 2 + N - fd.deg_m, 2);
    r.m_max_coarse = floor_div(2 * g - 2 + fd.deg_f, 2);
    auto [p, s] = prime_power_decompose(fd.field_order);
    if (s % 2 == 0) {
        std::uint64_t q0 = 1;
        for (unsigned i = 0; i < s / 2; ++i) q0 *= p;
        r.q0 = q0;
        const long long d = static_cast<long long>(q0) + 1;
        r.m_max_hermitian_exact = floor_div(2 * g - 2 + N - fd.deg_m, d);
        r.m_max_hermitian_coarse = floor_div(2 * g - 2 + fd.deg_f, d);
    }
    r.m_max_family = fd.so_m_max;
    r.paper_quoted_m_max = fd.paper_quoted_m_max;
    return r;
}

bool check_so_euclidean(const AGCode& code) {
    return gram_euclidean(code.genmat).is_zero();
}

bool check_so_hermitian(const AGCode& code, std::uint64_t q0) {
    return gram_hermitian(code.genmat, q0).is_zero();
}

FqMatrix dual_code(const AGCode& code) { return mat_nullspace(code.genmat); }

long long min_weight_exhaustive(const FqMatrix& genmat, std::uint64_t cap) {
    const auto& F = *genmat.field();
    const std::size_t k = genmat.rows(), n = genmat.cols();
    if (k == 0) fail(errc::zero_polynomial, "empty generator matrix");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > cap / F.order())
            fail(errc::too_many_codewords, "q^dim exceeds the enumeration cap");
        total *= F.order();
    }
    if (total > cap) fail(errc::too_many_codewords, "q^dim exceeds the enumeration cap");

    // odometer over message digits; each digit bump adds one generator row
    std::vector<felem> digits(k, 0);
    std::vector<felem> acc(n, 0);
    long long best = static_cast<long long>(n) + 1;
    for (std::uint64_t count = 1; count < total; ++count) {
        std::size_t pos = 0;
        for (;;) {
            const felem* row = genmat.row(pos);
            for (std::size_t c = 0; c < n; ++c)
                if (row[c]) acc[c] = F.add(acc[c], row[c]);
            digits[pos] = static_cast<felem>(digits[pos] + 1);
            if (digits[pos] < F.order()) break;
            digits[pos] = 0;
            ++pos;
        }
        long long w = 0;
        for (std::size_t c = 0; c < n; ++c) w += acc[c] != 0;
        if (w && w < best) best = w;
    }
    return best == static_cast<long long>(n) + 1 ? 0 : best;
}

namespace {

// columns condensed to rank-many coordinates via RREF; dependencies among
// columns are preserved by row operations
std::vector<std::vector<felem>> condensed_columns(const FqMatrix& genmat) {
    RrefResult rr = mat_rref(genmat);
    std::vector<std::vector<felem>> cols(genmat.cols(), std::vector<felem>(rr.rank));
    for (std::size_t c = 0; c < genmat.cols(); ++c)
        for (std::size_t r = 0; r < rr.rank; ++r) cols[c][r] = rr.rref.at(r, c);
    return cols;
}

std::vector<felem> normalized(const Field& F, std::vector<felem> v) {
    for (auto x : v) {
        if (x) {
            const felem inv = F.inv(x);
            if (inv != 1)
                for (auto& y : v) y = F.mul(inv, y);
            break;
        }
    }
    return v;
}

std::string key_of(const std::vector<felem>& v) {
    return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(felem));
}

}  // namespace

std::optional<int> min_dependent_columns(const FqMatrix& genmat, int wmax) {
    if (wmax < 1 || wmax > 4)
        fail(errc::precondition_violated, "min_dependent_columns supports 1 <= wmax <= 4");
    const auto& F = *genmat.field();
    auto cols = condensed_columns(genmat);
    const std::size_t n = cols.size();

    // t = 1: a zero column
    for (const auto& c : cols)
        if (std::all_of(c.begin(), c.end(), [](felem v) { return v == 0; })) return 1;
    if (wmax < 2) return std::nullopt;

    // t = 2: proportional columns
    std::unordered_map<std::string, std::vector<std::size_t>> norm_index;
    bool dup = false;
    std::vector<std::vector<felem>> norm(n);
    for (std::size_t c = 0; c < n; ++c) {
        norm[c] = normalized(F, cols[c]);
        auto& lst = norm_index[key_of(norm[c])];
        if (!lst.empty()) dup = true;
        lst.push_back(c);
    }
    if (dup) return 2;
    if (wmax < 3) return std::nullopt;

    // t = 3: some column in the span of two others
    const std::uint64_t q = F.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (felem lam = 1; lam < q; ++lam) {
                std::vector<felem> v(cols[i].size());
                for (std::size_t r = 0; r < v.size(); ++r)
                    v[r] = F.add(cols[i][r], F.mul(lam, cols[j][r]));
                auto it = norm_index.find(key_of(normalized(F, std::move(v))));
                if (it == norm_index.end()) continue;
                for (auto idx : it->second)
                    if (idx != i && idx != j) return 3;
            }
        }
    }
    if (wmax < 4) return std::nullopt;

    // t = 4: matching pair combinations, pairs processed lexicographically so
    // only disjoint earlier pairs are probed
    std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> pair_map;
    for (std::size_t k2 = 1; k2 < n; ++k2) {
        for (std::size_t l = 0; l < k2; ++l) {
            for (felem lam = 1; lam < q; ++lam) {
                std::vector<felem> v(cols[l].size());
                for (std::size_t r = 0; r < v.size(); ++r)
                    v[r] = F.add(cols[l][r], F.mul(lam, cols[k2][r]));
                const std::string key = key_of(normalized(F, v));
                auto it = pair_map.find(key);
                if (it != pair_map.end())
                    for (auto [a, b] : it->second)
                        if (a != l && a != k2 && b != l && b != k2) return 4;
            }
        }
        // insert this column's pairs after probing so matches are always disjoint-checked
        for (std::size_t l = 0; l < k2; ++l)
            for (felem lam = 1; lam < q; ++lam) {
                std::vector<felem> v(cols[l].size());
                for (std::size_t r = 0; r < v.size(); ++r)
                    v[r] = F.add(cols[l][r], F.mul(lam, cols[k2][r]));
                pair_map[key_of(normalized(F, std::move(v)))].push_back({l, k2});
            }
    }
    return std::nullopt;
}

}  // namespace soag
