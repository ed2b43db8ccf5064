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

#include "soag/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace soag {

const char* to_string(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::degree_zero: return "DegreeZero";
        case errc::order_too_large: return "OrderTooLarge";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_a_subfield_tower: return "NotASubfieldTower";
        case errc::duplicate_point: return "DuplicatePoint";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::coefficients_not_in_subfield: return "CoefficientsNotInSubfield";
        case errc::derivative_not_constant: return "DerivativeNotConstant";
        case errc::char_divides_deg_h: return "CharDividesDegH";
        case errc::no_one_place_criterion: return "NoOnePlaceCriterion";
        case errc::degrees_not_coprime: return "DegreesNotCoprime";
        case errc::is_a_line: return "IsALine";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::out_of_range: return "OutOfRange";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::not_a_quadratic_extension: return "NotAQuadraticExtension";
        case errc::matrix_gate: return "MatrixGate";
        case errc::m_out_of_range: return "MOutOfRange";
        case errc::negative_k: return "NegativeK";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::unsupported: return "Unsupported";
        case errc::not_applicable: return "NotApplicable";
        case errc::too_many_codewords: return "TooManyCodewords";
        case errc::hermitian_unavailable: return "HermitianUnavailable";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_u64_checked(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    const std::uint64_t cap = 1ull << 62;
    for (unsigned i = 0; i < e; ++i) {
        if (b != 0 && r > cap / b)
            fail(errc::order_too_large, "integer power exceeds 2^62");
        r *= b;
    }
    return r;
}

std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
    if (q < 2) fail(errc::not_prime, "q = " + std::to_string(q) + " is not a prime power");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned s = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++s;
    }
    if (t != 1) fail(errc::not_prime, "q = " + std::to_string(q) + " is not a prime power");
    return {p, s};
}

namespace {

// dense Z_p polynomial helpers for modulus search (ascending coefficients)
using zp_poly = std::vector<std::uint32_t>;

void zp_trim(zp_poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

zp_poly zp_mulmod(const zp_poly& a, const zp_poly& b, const zp_poly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    zp_poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    // reduce by monic mod
    const std::size_t dm = mod.size() - 1;
    for (std::size_t i = out.size(); i-- > dm;) {
        std::uint64_t c = out[i];
        if (!c) continue;
        out[i] = 0;
        for (std::size_t j = 0; j < dm; ++j)
            out[i - dm + j] =
                static_cast<std::uint32_t>((out[i - dm + j] + (p - c % p) * mod[j]) % p);
    }
    out.resize(dm);
    zp_trim(out);
    return out;
}

zp_poly zp_gcd(zp_poly a, zp_poly b, std::uint64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = 1;
        {  // inverse of b's leading coefficient mod p
            std::uint64_t l = b.back(), r = 1, base = l, e = p - 2;
            r = 1;
            while (e) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            lead_inv = r;
        }
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t f = a.back() * lead_inv % p;
            std::size_t sh = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[sh + i] = static_cast<std::uint32_t>((a[sh + i] + (p - f * b[i] % p)) % p);
            zp_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin: f (monic, degree m) is irreducible over Z_p iff x^{p^m} == x (mod f)
// and gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
bool zp_irreducible(const zp_poly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    auto frob_pow = [&](unsigned k) {  // x^{p^k} mod f
        zp_poly r{0, 1};
        for (unsigned i = 0; i < k; ++i) {
            zp_poly acc{1}, base = r;
            std::uint64_t e = p;
            while (e) {
                if (e & 1) acc = zp_mulmod(acc, base, f, p);
                base = zp_mulmod(base, base, f, p);
                e >>= 1;
            }
            r = acc;
        }
        return r;
    };
    auto minus_x = [&](zp_poly g) {
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = static_cast<std::uint32_t>((g[1] + p - 1) % p);
        zp_trim(g);
        return g;
    };
    if (!minus_x(frob_pow(static_cast<unsigned>(m))).empty()) return false;
    for (auto r : prime_factors(m))
        if (zp_gcd(minus_x(frob_pow(static_cast<unsigned>(m / r))), f, p).size() != 1)
            return false;
    return true;
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned m) {
    if (m == 0) fail(errc::degree_zero, "extension degree must be >= 1");
    if (p > kPrimeCap || !is_prime_u64(p))
        fail(errc::not_prime, "p = " + std::to_string(p) + " is not a (desk-scale) prime");
    // overflow-safe p^m
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > kMaterializationCap / p + 1) fail(errc::order_too_large, "p^m exceeds cap");
        q *= p;
    }
    if (q > kMaterializationCap)
        fail(errc::order_too_large,
             "p^m = " + std::to_string(q) + " exceeds the materialization cap");

    static std::mutex reg_mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto key = std::make_pair(p, m);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    FieldPtr f(new Field(p, m));
    registry.emplace(key, f);
    return f;
}

Field::Field(std::uint64_t p, unsigned m) : p_(p), m_(m) {
    q_ = 1;
    ppow_.resize(m_ + 1);
    for (unsigned i = 0; i <= m_; ++i) {
        ppow_[i] = q_;
        if (i < m_) q_ *= p_;
    }

    // canonical modulus: least index whose digits give a monic irreducible
    if (m_ == 1) {
        modulus_ = {0, 1};
    } else {
        for (std::uint64_t idx = 0;; ++idx) {
            zp_poly cand(m_ + 1, 0);
            std::uint64_t k = idx;
            for (unsigned i = 0; i < m_; ++i) {
                cand[i] = static_cast<std::uint32_t>(k % p_);
                k /= p_;
            }
            cand[m_] = 1;
            if (zp_irreducible(cand, p_)) {
                modulus_ = cand;
                break;
            }
        }
    }

    if (q_ <= kTableCap) {
        // find a primitive element, then exp/log/Zech tables
        auto fac = prime_factors(q_ - 1);
        felem g = 0;
        for (felem cand = (q_ == 2 ? 1u : 2u); cand < q_; ++cand) {
            bool ok = true;
            for (auto f : fac) {
                felem r = 1, b = cand;
                std::uint64_t e = (q_ - 1) / f;
                while (e) {
                    if (e & 1) r = mul_generic(r, b);
                    b = mul_generic(b, b);
                    e >>= 1;
                }
                if (r == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                g = cand;
                break;
            }
        }
        if (q_ == 2) g = 1;
        const std::size_t n1 = static_cast<std::size_t>(q_ - 1);
        exp_.assign(2 * n1, 0);
        log_.assign(static_cast<std::size_t>(q_), 0);
        felem x = 1;
        for (std::size_t i = 0; i < n1; ++i) {
            exp_[i] = x;
            exp_[i + n1] = x;
            log_[x] = static_cast<std::uint32_t>(i);
            x = mul_generic(x, g);
        }
        zech_.assign(n1, kZechNone);
        for (std::size_t k = 0; k < n1; ++k) {
            felem s = add_digits(1, exp_[k]);
            zech_[k] = s ? log_[s] : kZechNone;
        }
        log_neg1_ = log_[neg_digits(1)];
        tables_ = true;
    }
}

felem Field::add_digits(felem a, felem b) const {
    felem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t da = (a / ppow_[i]) % p_;
        std::uint64_t db = (b / ppow_[i]) % p_;
        out += static_cast<felem>(((da + db) % p_) * ppow_[i]);
    }
    return out;
}

felem Field::neg_digits(felem a) const {
    felem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint64_t da = (a / ppow_[i]) % p_;
        out += static_cast<felem>(((p_ - da) % p_) * ppow_[i]);
    }
    return out;
}

felem Field::mul_generic(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    // schoolbook product of coefficient vectors, reduced by the modulus
    std::vector<std::uint32_t> da = coeffs(a), db = coeffs(b);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    }
    for (unsigned i = 2 * m_ - 2; i + 1 > m_; --i) {
        std::uint64_t c = prod[i] % p_;
        prod[i] = 0;
        if (!c) continue;
        for (unsigned j = 0; j < m_; ++j)
            prod[i - m_ + j] += (p_ - modulus_[j] % p_) * c;
    }
    felem out = 0;
    for (unsigned i = 0; i < m_; ++i)
        out += static_cast<felem>((prod[i] % p_) * ppow_[i]);
    return out;
}

felem Field::add(felem a, felem b) const {
    if (!tables_) return add_digits(a, b);
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a], lb = log_[b];
    const std::uint32_t n1 = static_cast<std::uint32_t>(q_ - 1);
    std::uint32_t k = lb >= la ? lb - la : lb + n1 - la;
    std::uint32_t z = zech_[k];
    if (z == kZechNone) return 0;
    std::uint32_t s = la + z;
    if (s >= n1) s -= n1;
    return exp_[s];
}

felem Field::neg(felem a) const {
    if (a == 0) return 0;
    if (!tables_) return neg_digits(a);
    std::uint32_t s = log_[a] + log_neg1_;
    const std::uint32_t n1 = static_cast<std::uint32_t>(q_ - 1);
    if (s >= n1) s -= n1;
    return exp_[s];
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    if (!tables_) return mul_generic(a, b);
    return exp_[log_[a] + log_[b]];
}

felem Field::inv(felem a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero");
    if (!tables_) {
        // a^(q-2)
        return pow(a, q_ - 2);
    }
    const std::uint32_t n1 = static_cast<std::uint32_t>(q_ - 1);
    std::uint32_t l = log_[a];
    return exp_[(n1 - l) % n1];
}

felem Field::pow(felem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tables_) {
        const std::uint64_t n1 = q_ - 1;
        return exp_[static_cast<std::size_t>((std::uint64_t(log_[a]) * (e % n1)) % n1)];
    }
    felem r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

felem Field::from_int(std::int64_t c) const {
    std::int64_t r = c % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<felem>(r);
}

std::vector<std::uint32_t> Field::coeffs(felem a) const {
    std::vector<std::uint32_t> out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = static_cast<std::uint32_t>(a % p_);
        a = static_cast<felem>(a / p_);
    }
    return out;
}

felem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() != m_) fail(errc::parse_error, "coefficient vector must have length m");
    felem out = 0;
    for (unsigned i = 0; i < m_; ++i) {
        if (c[i] >= p_) fail(errc::parse_error, "coefficient out of [0,p)");
        out += static_cast<felem>(c[i] * ppow_[i]);
    }
    return out;
}

felem Field::trace_rel(felem a, std::uint64_t q0, unsigned r) const {
    auto [p0, s0] = prime_power_decompose(q0);
    if (p0 != p_ || s0 > m_ || m_ % s0 != 0)
        fail(errc::not_a_subfield_tower, "q0 is not a subfield order of this field");
    // q0^r must be the full field order
    std::uint64_t t = 1;
    for (unsigned i = 0; i < r; ++i) t *= q0;
    if (t != q_) fail(errc::not_a_subfield_tower, "q0^r != field order");
    felem acc = 0, x = a;
    for (unsigned i = 0; i < r; ++i) {
        acc = add(acc, x);
        x = pow(x, q0);
    }
    return acc;
}

bool Field::in_subfield(felem a, std::uint64_t q0) const {
    auto [p0, s0] = prime_power_decompose(q0);
    if (p0 != p_ || m_ % s0 != 0)
        fail(errc::not_a_subfield_tower, "q0 is not a subfield order of this field");
    return pow(a, q0) == a;
}

std::string Field::elem_text(felem a) const {
    auto c = coeffs(a);
    std::string out;
    for (unsigned i = 0; i < m_; ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

felem Field::elem_from_text(const std::string& s) const {
    std::vector<std::uint32_t> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            long v = std::stol(tok);
            if (v < 0) fail(errc::parse_error, "negative coefficient");
            c.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
            fail(errc::parse_error, "bad element text: " + s);
        }
    }
    c.resize(m_, 0);
    return from_coeffs(c);
}

}  // namespace soag
