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

#include "soag/linalg.hpp"

#include <algorithm>

namespace soag {

FqMatrix FqMatrix::identity(FieldPtr f, std::size_t n) {
    FqMatrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](felem v) { return v == 0; });
}

RrefResult mat_rref(const FqMatrix& m) {
    RrefResult out;
    out.rref = m;
    FqMatrix& r = out.rref;
    const auto& F = *m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && r.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(r.at(piv, j), r.at(rank, j));
        const felem inv = F.inv(r.at(rank, c));
        if (inv != 1)
            for (std::size_t j = c; j < cols; ++j) r.at(rank, j) = F.mul(inv, r.at(rank, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const felem f = r.at(i, c);
            if (!f) continue;
            for (std::size_t j = c; j < cols; ++j)
                r.at(i, j) = F.sub(r.at(i, j), F.mul(f, r.at(rank, j)));
        }
        out.pivots.push_back(c);
        ++rank;
    }
    out.rank = rank;
    return out;
}

std::size_t mat_rank(const FqMatrix& m) { return mat_rref(m).rank; }

FqMatrix mat_nullspace(const FqMatrix& m) {
    RrefResult rr = mat_rref(m);
    const std::size_t cols = m.cols();
    std::vector<char> is_pivot(cols, 0);
    for (auto c : rr.pivots) is_pivot[c] = 1;
    FqMatrix ns(m.field(), cols - rr.rank, cols);
    const auto& F = *m.field();
    std::size_t out_row = 0;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        ns.at(out_row, free_c) = 1;
        for (std::size_t i = 0; i < rr.rank; ++i)
            ns.at(out_row, rr.pivots[i]) = F.neg(rr.rref.at(i, free_c));
        ++out_row;
    }
    return ns;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b) {
    if (!a.field()->same(*b.field())) fail(errc::field_mismatch, "matrix product fields differ");
    if (a.cols() != b.rows()) fail(errc::shape_mismatch, "matrix product shapes do not conform");
    const auto& F = *a.field();
    FqMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const felem v = a.at(i, k);
            if (!v) continue;
            const felem* brow = b.row(k);
            felem* orow = out.row(i);
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (brow[j]) orow[j] = F.add(orow[j], F.mul(v, brow[j]));
        }
    }
    return out;
}

FqMatrix mat_transpose(const FqMatrix& m) {
    FqMatrix out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

FqMatrix gram_euclidean(const FqMatrix& g) {
    const auto& F = *g.field();
    FqMatrix out(g.field(), g.rows(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = i; j < g.rows(); ++j) {
            felem acc = 0;
            const felem* ri = g.row(i);
            const felem* rj = g.row(j);
            for (std::size_t c = 0; c < g.cols(); ++c) acc = F.add(acc, F.mul(ri[c], rj[c]));
            out.at(i, j) = acc;
            out.at(j, i) = acc;
        }
    }
    return out;
}

FqMatrix gram_hermitian(const FqMatrix& g, std::uint64_t q0) {
    const auto& F = *g.field();
    if (q0 * q0 != F.order())
        fail(errc::not_a_quadratic_extension, "gram_hermitian needs |field| = q0^2");
    // x -> x^q0 as a table, then an ordinary product against the powered rows
    std::vector<felem> frob(static_cast<std::size_t>(F.order()));
    for (felem x = 0; x < F.order(); ++x) frob[x] = F.pow(x, q0);
    FqMatrix out(g.field(), g.rows(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.rows(); ++j) {
            felem acc = 0;
            const felem* ri = g.row(i);
            const felem* rj = g.row(j);
            for (std::size_t c = 0; c < g.cols(); ++c)
                acc = F.add(acc, F.mul(ri[c], frob[rj[c]]));
            out.at(i, j) = acc;
        }
    }
    return out;
}

std::size_t IncrementalRank::push_row(const felem* row) {
    const auto& F = *f_;
    std::vector<felem> v(row, row + cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t lc = lead_[r];
        if (v[lc] == 0) continue;
        const felem f = v[lc];
        const auto& er = rows_[r];
        for (std::size_t j = lc; j < cols_; ++j)
            if (er[j]) v[j] = F.sub(v[j], F.mul(f, er[j]));
    }
    std::size_t lc = 0;
    while (lc < cols_ && v[lc] == 0) ++lc;
    if (lc < cols_) {
        const felem inv = F.inv(v[lc]);
        if (inv != 1)
            for (std::size_t j = lc; j < cols_; ++j) v[j] = F.mul(inv, v[j]);
        // keep echelon rows ordered by leading column
        std::size_t pos = 0;
        while (pos < lead_.size() && lead_[pos] < lc) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        lead_.insert(lead_.begin() + static_cast<std::ptrdiff_t>(pos), lc);
    }
    return rows_.size();
}

std::string mat_dump(const FqMatrix& m) {
    const auto& F = *m.field();
    std::string out = std::to_string(F.characteristic()) + " " + std::to_string(F.degree()) +
                      " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += F.elem_text(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace soag
