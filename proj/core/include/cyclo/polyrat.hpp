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

#ifndef CYCLO_POLYRAT_HPP
#define CYCLO_POLYRAT_HPP

#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/gf.hpp"

namespace cyclo {

/// Degree of the zero polynomial. Degree arithmetic must test for it
/// explicitly; it is never -1.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/**
 * @brief Dense univariate polynomial over F_q, ascending coefficients.
 *
 * Always trimmed: the last stored coefficient is nonzero, and the zero
 * polynomial has no coefficients.
 */
class Poly {
public:
    explicit Poly(gf::FieldPtr field);
    Poly(gf::FieldPtr field, std::vector<gf::Code> coeffs);

    static Poly constant(const gf::FieldElement& c);
    static Poly constant(const gf::FieldPtr& field, std::int64_t c);
    static Poly monomial(const gf::FieldElement& c, int k);
    static Poly x(const gf::FieldPtr& field);
    /// x - rho
    static Poly linear(const gf::FieldElement& rho);
    /// Ascending integer coefficients mapped into F_p.
    static Poly from_ints(const gf::FieldPtr& field, std::initializer_list<std::int64_t> coeffs);
    static Poly from_ints(const gf::FieldPtr& field, std::span<const std::int64_t> coeffs);

    const gf::FieldPtr& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    int degree() const noexcept { return c_.empty() ? kDegreeNegInf : static_cast<int>(c_.size()) - 1; }
    /// Zero beyond the degree.
    gf::FieldElement coeff(int k) const;
    gf::Code raw(int k) const noexcept {
        return (k < 0 || k >= static_cast<int>(c_.size())) ? 0 : c_[k];
    }
    std::span<const gf::Code> raw() const noexcept { return c_; }
    gf::FieldElement leading() const;
    std::size_t term_count() const noexcept;

    gf::FieldElement evaluate(const gf::FieldElement& at) const;
    Poly derivative() const;
    Poly monic() const;
    Poly pow(int e) const;
    Poly scaled(gf::Code c) const;
    Poly shifted(int k) const;  // times x^k, k >= 0

    /// Throws std::domain_error when b is zero.
    std::pair<Poly, Poly> divrem(const Poly& b) const;
    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    /// (low, high) with low + high = *this; low keeps monomials of degree
    /// <= m when inclusive, < m otherwise.
    std::pair<Poly, Poly> split_at_degree(int m, bool inclusive) const;

    /// "c0 + c1*x + c2*x^2" over the nonzero terms; "0" for zero.
    std::string render() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const gf::FieldElement& c, const Poly& a);
    Poly operator-() const;
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.c_ == b.c_ && gf::same_field(a.field_, b.field_);
    }

private:
    void trim() noexcept;

    gf::FieldPtr field_;
    std::vector<gf::Code> c_;
};

/**
 * @brief Reduced quotient num/den in k(x): den monic, gcd(num, den) = 1,
 * zero stored as 0/1.
 */
class RatFn {
public:
    explicit RatFn(gf::FieldPtr field);
    RatFn(Poly num);  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den is zero.
    RatFn(Poly num, Poly den);

    static RatFn constant(const gf::FieldElement& c) { return RatFn(Poly::constant(c)); }

    const gf::FieldPtr& field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    /// Throws std::domain_error on zero.
    RatFn inverse() const;
    RatFn derivative() const;
    RatFn pow(int e) const;

    /// Order of vanishing at x = rho (negative for a pole). Throws
    /// std::domain_error on zero.
    int root_multiplicity(const gf::FieldElement& rho) const;
    /// deg den - deg num: the valuation at x = infinity. Throws on zero.
    int degree_valuation() const;
    /// Res_{x=inf}(h dx) = -[coefficient of x^{-1} in the expansion of h at
    /// infinity].
    gf::FieldElement residue_at_infinity() const;

    /// "num" when den = 1, otherwise "num/den" with multi-term parts in parens.
    std::string render() const;

    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    /// Throws std::domain_error when b is zero.
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const gf::FieldElement& c, const RatFn& a);
    RatFn operator-() const;
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }

    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    struct Reduced {};
    RatFn(Reduced, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

/// Exact quotient a / b; throws std::logic_error if the division leaves a remainder.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Multiplicity of (x - rho) in a nonzero polynomial.
int poly_root_multiplicity(const Poly& a, const gf::FieldElement& rho);

}  // namespace cyclo

#endif  // CYCLO_POLYRAT_HPP
