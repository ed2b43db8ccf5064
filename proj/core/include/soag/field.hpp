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

#ifndef SOAG_FIELD_HPP
#define SOAG_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "soag/errors.hpp"

namespace soag {

/// Index of a field element: the coefficient tuple (c_0,...,c_{m-1}) of its
/// representative polynomial read as the base-p integer sum c_i * p^i.
/// Enumeration order, element text encoding and the canonical-modulus search
/// all use this indexing.
using felem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with a canonical, reproducible modulus: the minimal monic
/// irreducible of degree m over Z_p in index order. Immutable and safe to
/// share between threads; all operations are pure.
///
/// Fields of order <= kTableCap get exp/log and Zech tables, making every
/// arithmetic op O(1); larger fields (up to kMaterializationCap) fall back to
/// coefficient arithmetic.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static constexpr std::uint64_t kMaterializationCap = 1ull << 20;
    static constexpr std::uint64_t kTableCap = 1ull << 16;
    static constexpr std::uint64_t kPrimeCap = 1ull << 20;

    /// Construct (or fetch from the process-wide registry) GF(p^m).
    /// Throws: not_prime, degree_zero, order_too_large.
    static FieldPtr make(std::uint64_t p, unsigned m);

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return q_; }
    /// Modulus coefficients, ascending, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    felem zero() const noexcept { return 0; }
    felem one() const noexcept { return 1; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    /// Throws division_by_zero.
    felem inv(felem a) const;
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    /// a^e with 0^0 = 1.
    felem pow(felem a, std::uint64_t e) const;

    /// Embed an integer as c mod p.
    felem from_int(std::int64_t c) const;
    /// Coefficients (c_0,...,c_{m-1}) of the element.
    std::vector<std::uint32_t> coeffs(felem a) const;
    felem from_coeffs(const std::vector<std::uint32_t>& c) const;

    /// Relative trace to GF(q0): a + a^q0 + ... + a^{q0^{r-1}}.
    /// Requires q0^r == order() and q0 a power of p; throws not_a_subfield_tower.
    felem trace_rel(felem a, std::uint64_t q0, unsigned r) const;

    /// True iff a^q0 == a, i.e. a lies in the subfield of order q0.
    /// Requires q0 = p^s with s | m; throws not_a_subfield_tower.
    bool in_subfield(felem a, std::uint64_t q0) const;

    /// Comma-separated coefficient encoding, e.g. "2,1" for 2+t in GF(9).
    std::string elem_text(felem a) const;
    felem elem_from_text(const std::string& s) const;

    bool same(const Field& other) const noexcept { return this == &other; }

    ~Field() = default;
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(std::uint64_t p, unsigned m);

    felem mul_generic(felem a, felem b) const;
    felem add_digits(felem a, felem b) const;
    felem neg_digits(felem a) const;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> ppow_;  // p^i, i = 0..m

    bool tables_ = false;
    std::vector<felem> exp_;        // size 2(q-1), exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
    std::vector<std::uint32_t> zech_; // zech_[k] = log(1 + g^k), or kZechNone
    std::uint32_t log_neg1_ = 0;
    static constexpr std::uint32_t kZechNone = 0xffffffffu;
};

/// Value-type element carrying its field; checked, convenient, not the
/// hot path (matrices and polynomials store raw indices).
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldPtr f, felem v) : f_(std::move(f)), v_(v) {}

    const FieldPtr& field() const noexcept { return f_; }
    felem value() const noexcept { return v_; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.f_, a.f_->mul(a.v_, b.v_)};
    }
    FieldElem operator-() const { return {f_, f_->neg(v_)}; }
    FieldElem inverse() const { return {f_, f_->inv(v_)}; }
    FieldElem pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return a.v_ == b.v_;
    }

  private:
    static void check(const FieldElem& a, const FieldElem& b) {
        if (!a.f_ || !b.f_ || !a.f_->same(*b.f_))
            fail(errc::field_mismatch, "elements of different fields");
    }
    FieldPtr f_;
    felem v_ = 0;
};

bool is_prime_u64(std::uint64_t n) noexcept;

/// Decompose a prime power: returns {p, s} with q = p^s, or throws
/// not_prime if q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q);

/// b^e, throwing order_too_large past 2^62 (parameter formulas stay exact).
std::uint64_t pow_u64_checked(std::uint64_t b, unsigned e);

/// Floor division for possibly-negative numerators.
inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace soag

#endif
