/*
   Copyright 2026 The cyclo Authors

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

#ifndef CYCLO_GF_HPP
#define CYCLO_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo::gf {

/// Canonical integer encoding of an element of F_q: the coordinates
/// c_0, ..., c_{d-1} over Z/p read as base-p digits, c_0 least significant.
using Code = std::uint64_t;

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * @brief The finite field F_q = F_p[z]/(m(z)), q = p^d.
 *
 * Fields are immutable and always handled through FieldPtr. All arithmetic
 * is on Codes; FieldElement is the checked value wrapper. For extension
 * fields with q <= 2^20 multiplication goes through discrete log tables
 * built at construction.
 */
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Throws std::invalid_argument when p is not prime, the modulus is not
    /// monic of degree >= 2 or not irreducible, or q does not fit 62 bits.
    static FieldPtr make(std::int64_t p, std::vector<std::int64_t> modulus = {});

    std::uint64_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return d_; }
    std::uint64_t order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return d_ == 1; }
    /// Ascending coefficients of the modulus; empty for a prime field.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

    Code add(Code a, Code b) const noexcept {
        if (d_ == 1) {
            Code s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_digits(a, b);
    }
    Code neg(Code a) const noexcept {
        if (d_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_digits(a);
    }
    Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
    Code mul(Code a, Code b) const noexcept {
        if (d_ == 1) return (a * b) % p_;  // p < 2^31
        if (a == 0 || b == 0) return 0;
        if (!exp_.empty()) {
            std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
            if (s >= q_ - 1) s -= q_ - 1;
            return exp_[s];
        }
        return mul_slow(a, b);
    }
    /// Throws std::domain_error on zero.
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    /// Negative exponents invert first; 0^e with e < 0 throws.
    Code pow(Code a, std::int64_t e) const;
    /// Image of an integer under Z -> F_p -> F_q.
    Code from_int(std::int64_t v) const noexcept;

    FieldElement element(Code c) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(std::int64_t v) const;
    /// Throws std::invalid_argument unless coords.size() <= d.
    FieldElement from_coordinates(std::span<const std::int64_t> coords) const;

    std::vector<std::int64_t> coordinates(Code c) const;
    /// Integer for prime fields, "[c0,c1,...]" for extensions.
    std::string render(Code c) const;

    /// The element of exact multiplicative order n with the smallest Code.
    /// Throws std::invalid_argument("no primitive n-th root in field") if
    /// n does not divide q - 1, or n < 2.
    FieldElement nth_root_of_unity(std::int64_t n) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Code a) const;

private:
    struct Private {};

public:
    Field(Private, std::uint64_t p, std::vector<std::uint64_t> modulus);

private:
    Code add_digits(Code a, Code b) const noexcept;
    Code neg_digits(Code a) const noexcept;
    Code mul_slow(Code a, Code b) const noexcept;
    void build_tables();

    std::uint64_t p_;
    int d_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
};

/// Deep equality of two field handles (pointer identity is the fast path).
inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

/// Throws std::invalid_argument("mismatched fields") unless same_field(a, b).
void require_same_field(const FieldPtr& a, const FieldPtr& b);

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {}

    const FieldPtr& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }
    std::vector<std::int64_t> coordinates() const { return field_->coordinates(code_); }
    std::string to_string() const { return field_->render(code_); }

    FieldElement pow(std::int64_t e) const { return {field_, field_->pow(code_, e)}; }
    FieldElement inverse() const { return {field_, field_->inv(code_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    /// Throws std::domain_error when b is zero.
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {field_, field_->neg(code_)}; }

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.code_ == b.code_ && same_field(a.field_, b.field_);
    }

private:
    FieldPtr field_;
    Code code_ = 0;
};

/// Primality by trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Prime factors of n without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Irreducibility over Z/p: gcd(m, x^{p^i} - x mod m) = 1 for i = 1..floor(d/2).
/// Coefficients ascending, already reduced; m must be monic of degree >= 1.
bool is_irreducible_mod_p(std::span<const std::uint64_t> m, std::uint64_t p);

/// Smallest (by coefficient encoding) monic irreducible polynomial of degree d over F_p.
std::vector<std::int64_t> smallest_irreducible(std::uint64_t p, int d);

}  // namespace cyclo::gf

#endif  // CYCLO_GF_HPP
