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

#ifndef SOAG_POLY_HPP
#define SOAG_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "soag/field.hpp"

namespace soag {

/// Univariate polynomial over a finite field. Coefficients ascending,
/// normalized (no trailing zeros); the zero polynomial has an empty
/// coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<felem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
    static Poly monomial(FieldPtr f, std::uint64_t deg, felem coeff = 1);
    /// Coefficients given as integers, embedded mod p.
    static Poly from_ints(const FieldPtr& f, std::initializer_list<std::int64_t> coeffs);
    static Poly from_ints(const FieldPtr& f, const std::vector<std::int64_t>& coeffs);

    const FieldPtr& field() const noexcept { return f_; }
    /// -1 for the zero polynomial.
    long long degree() const noexcept { return static_cast<long long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    felem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<felem>& coeffs() const noexcept { return c_; }
    felem leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(felem s) const;
    friend bool operator==(const Poly& a, const Poly& b);

    /// Horner evaluation.
    felem eval(felem x) const;

    /// Formal derivative in characteristic p: terms with p | i vanish.
    Poly derivative() const;

    /// Quotient and remainder; throws division_by_zero if b == 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);
    /// this^e mod modpoly by square-and-multiply; deg(modpoly) >= 1.
    Poly powmod(std::uint64_t e, const Poly& modpoly) const;

    Poly make_monic() const;

    /// Human-readable form, descending powers, residue coefficients,
    /// e.g. "z^17 + 2z". Non-prime-subfield coefficients print as "(c0,c1,..)".
    std::string text(char var = 'z') const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static void check_same(const Poly& a, const Poly& b);

    FieldPtr f_;
    std::vector<felem> c_;
};

struct RootScan {
    std::vector<felem> roots;            ///< distinct roots, in enumeration order
    bool splits_with_distinct_roots = false;  ///< #roots == deg f
};

/// Exhaustive root scan over the whole field.
/// Throws zero_polynomial, order_too_large.
RootScan poly_roots(const Poly& f);

/// prod (z - a) over the given points; monic, separable by construction.
/// Throws duplicate_point.
Poly vanishing_poly(const FieldPtr& f, const std::vector<felem>& points);

/// The unique polynomial of degree <= q^n - 1 representing
/// a |-> Tr_{GF(q^n)/GF(q)}(G(a)). G lives over GF(q^n) with all coefficients
/// in the subfield GF(q); exponents e >= 1 fold as ((e-1) mod (q^n-1)) + 1.
/// Throws coefficients_not_in_subfield, not_a_subfield_tower.
Poly trace_poly(const Poly& G, std::uint64_t q, unsigned n);

/// Parse a polynomial in the compact report syntax used by the paper-suite
/// manifest: terms like "2z^52", "z", "-z", "17", joined by +/-. Coefficients
/// are prime-subfield integers. Throws parse_error.
Poly poly_from_text(const FieldPtr& f, const std::string& s, char var = 'z');

}  // namespace soag

#endif
