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

#ifndef SOAG_ERRORS_HPP
#define SOAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace soag {

/// Machine-readable error codes. Every precondition failure in the library
/// throws an Error carrying one of these.
enum class errc {
    not_prime,
    degree_zero,
    order_too_large,
    field_mismatch,
    division_by_zero,
    not_a_subfield_tower,
    duplicate_point,
    zero_polynomial,
    coefficients_not_in_subfield,
    derivative_not_constant,
    char_divides_deg_h,
    no_one_place_criterion,
    degrees_not_coprime,
    is_a_line,
    hypothesis_violated,
    out_of_range,
    shape_mismatch,
    not_a_quadratic_extension,
    matrix_gate,
    m_out_of_range,
    negative_k,
    precondition_violated,
    unsupported,
    not_applicable,
    too_many_codewords,
    hermitian_unavailable,
    parse_error,
};

const char* to_string(errc c) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc c, const std::string& msg)
        : std::runtime_error(std::string(to_string(c)) + ": " + msg), code_(c) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace soag

#endif
