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

#ifndef CYCLO_FUNCFIELD_HPP
#define CYCLO_FUNCFIELD_HPP

#include <string>
#include <vector>

#include "cyclo/curve.hpp"
#include "cyclo/polyrat.hpp"

namespace cyclo {

/**
 * @brief Element sum_j a_j y^j of the function field, j < degree of the cover.
 *
 * Products are reduced with y^n = f (Kummer) or y^p = y + r (Artin-Schreier)
 * so the representation is canonical.
 */
class FFElem {
public:
    explicit FFElem(CurvePtr curve);
    /// Coefficients beyond the cover degree are reduced.
    FFElem(CurvePtr curve, std::vector<RatFn> coeffs);

    static FFElem constant(CurvePtr curve, RatFn c);
    /// c * y^k for any k >= 0.
    static FFElem monomial(CurvePtr curve, RatFn c, int k);

    const CurvePtr& curve() const noexcept { return curve_; }
    int size() const noexcept { return static_cast<int>(a_.size()); }
    const RatFn& coeff(int j) const { return a_.at(static_cast<std::size_t>(j)); }
    const std::vector<RatFn>& coeffs() const noexcept { return a_; }
    bool is_zero() const noexcept;

    /// `(a0) + (a1)*y + ... + (ak)*y^k` over the nonzero coefficients; "0" for zero.
    std::string render() const;

    friend FFElem operator+(const FFElem& a, const FFElem& b);
    friend FFElem operator-(const FFElem& a, const FFElem& b);
    /// Throws std::invalid_argument on mismatched curves.
    friend FFElem operator*(const FFElem& a, const FFElem& b);
    friend FFElem operator*(const RatFn& c, const FFElem& a);
    FFElem operator-() const;
    FFElem pow(int e) const;

    friend bool operator==(const FFElem& a, const FFElem& b) { return a.curve_ == b.curve_ && a.a_ == b.a_; }

private:
    void reduce(std::vector<RatFn> raw);

    CurvePtr curve_;
    std::vector<RatFn> a_;
};

/// A meromorphic differential coeff * dx.
class FFDiff {
public:
    explicit FFDiff(FFElem coeff) : coeff_(std::move(coeff)) {}

    const FFElem& coeff() const noexcept { return coeff_; }
    const CurvePtr& curve() const noexcept { return coeff_.curve(); }
    bool is_zero() const noexcept { return coeff_.is_zero(); }
    std::string render() const;

    friend FFDiff operator+(const FFDiff& a, const FFDiff& b) { return FFDiff(a.coeff_ + b.coeff_); }
    friend FFDiff operator-(const FFDiff& a, const FFDiff& b) { return FFDiff(a.coeff_ - b.coeff_); }
    friend FFDiff operator*(const RatFn& c, const FFDiff& a) { return FFDiff(c * a.coeff_); }
    friend FFDiff operator*(const FFElem& c, const FFDiff& a) { return FFDiff(c * a.coeff_); }
    FFDiff operator-() const { return FFDiff(-coeff_); }
    friend bool operator==(const FFDiff& a, const FFDiff& b) { return a.coeff_ == b.coeff_; }

private:
    FFElem coeff_;
};

enum class PlaceKind { branch, over_zero, over_infinity };

/**
 * @brief All points of X above one point of P^1 that behave alike.
 *
 * `e` is the valuation of the local base coordinate (x - rho, or x, or 1/x)
 * at any point of the class.
 */
struct PlaceClass {
    PlaceKind kind = PlaceKind::over_infinity;
    std::size_t branch_index = 0;
    bool above_zero = false;
    gf::FieldElement base;  ///< rho_i, or 0 for the fiber over zero
    int e = 1;
    int points = 1;
    int v_x = 0;
    int v_y = 0;
    int v_dx = 0;

    std::string label() const;
};

/// Branch(i) for every branch point, OverZero when 0 is not a branch point,
/// and OverInfinity.
std::vector<PlaceClass> place_classes(const Curve& curve);

struct ValuationBound {
    int bound = 0;
    bool exact = false;
    /// The minimum is attained by one term only, so by the ultrametric
    /// inequality it is the true valuation at every point of the class.
    bool unique_minimum = false;
};

/// Valuation of a single coefficient of the base field at the class.
int base_valuation(const RatFn& a, const PlaceClass& place);

/// Lower bound min_j [v(a_j) + j v(y)]. Exact at branch classes whenever
/// the minimum is attained by a single term; never claimed exact over 0
/// or infinity. Throws std::domain_error on zero.
ValuationBound valuation_bound(const FFElem& a, const PlaceClass& place);
ValuationBound valuation_bound(const FFDiff& w, const PlaceClass& place);

/// True when no coefficient has a pole at a finite point outside the
/// branch locus and x = 0 (where y is integral and the cover is unramified).
bool poles_confined_to_classes(const FFElem& a);

/// Generator sigma^j: y -> zeta^j y (Kummer) or y -> y + j (Artin-Schreier).
FFElem galois(const FFElem& a, int j);

/// Tr_{F/E} by the coefficient rule: n a_0 (Kummer) or -a_{p-1} (AS).
RatFn trace(const FFElem& a);
/// Tr_{F/E} as the y^0 coefficient of the sum of all Galois conjugates.
RatFn trace_by_orbit(const FFElem& a);
/// Product of all Galois conjugates (an element of k(x)).
RatFn norm(const FFElem& a);

/// d(sum a_j y^j) = sum a_j' y^j dx + sum j a_j y^{j-1} dy.
FFDiff exterior_d(const FFElem& a);

/// c * Res_inf(Tr(f * coeff(w)) dx), c = -1/n (Kummer) or 1 (AS).
gf::FieldElement pairing(const FFElem& f, const FFDiff& w);

}  // namespace cyclo

#endif  // CYCLO_FUNCFIELD_HPP
