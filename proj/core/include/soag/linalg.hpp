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

#ifndef SOAG_LINALG_HPP
#define SOAG_LINALG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "soag/field.hpp"

namespace soag {

/// Dense row-major matrix over a finite field. Entries are element indices.
class FqMatrix {
  public:
    FqMatrix() = default;
    FqMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FqMatrix identity(FieldPtr f, std::size_t n);

    const FieldPtr& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    felem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    felem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const felem* row(std::size_t r) const { return a_.data() + r * cols_; }
    felem* row(std::size_t r) { return a_.data() + r * cols_; }

    bool is_zero() const;

  private:
    FieldPtr f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<felem> a_;
};

struct RrefResult {
    FqMatrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduced row echelon form.
RrefResult mat_rref(const FqMatrix& m);
std::size_t mat_rank(const FqMatrix& m);

/// Basis rows of { v : M v^T = 0 }; (cols - rank) rows.
FqMatrix mat_nullspace(const FqMatrix& m);

/// Throws shape_mismatch.
FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b);
FqMatrix mat_transpose(const FqMatrix& m);

/// G * G^T.
FqMatrix gram_euclidean(const FqMatrix& g);
/// G * (G^sigma)^T where sigma raises entries to the q0-th power; requires
/// |field| = q0^2 (NotAQuadraticExtension otherwise).
FqMatrix gram_hermitian(const FqMatrix& g, std::uint64_t q0);

/// Feeds rows one at a time, maintaining an echelon basis; rank() after each
/// push gives the rank of the prefix. Used for the nested-code dimension
/// sweeps where each basis extends the previous one.
class IncrementalRank {
  public:
    IncrementalRank(FieldPtr f, std::size_t cols) : f_(std::move(f)), cols_(cols) {}
    std::size_t push_row(const felem* row);
    std::size_t rank() const noexcept { return rows_.size(); }

  private:
    FieldPtr f_;
    std::size_t cols_;
    std::vector<std::vector<felem>> rows_;  // echelon rows
    std::vector<std::size_t> lead_;         // leading column per row
};

/// Matrix-level verification gate; larger instances run formula-only.
inline constexpr std::size_t kMatrixGateRows = 512;
inline constexpr std::size_t kMatrixGateCols = 65536;

/// Dump format: header "p m rows cols", then one line per row with entries
/// as comma-joined coefficient tuples separated by spaces.
std::string mat_dump(const FqMatrix& m);

}  // namespace soag

#endif
