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

#include "cyclo/funcfield.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

void require_same_curve(const CurvePtr& a, const CurvePtr& b) {
    if (a != b) throw std::invalid_argument("mismatched curves");
}

RatFn zero_of(const Curve& c) { return RatFn(c.field()); }

}  // namespace

FFElem::FFElem(CurvePtr curve) : curve_(std::move(curve)) {
    curve_->require_valid();
    a_.assign(static_cast<std::size_t>(curve_->degree()), zero_of(*curve_));
}

FFElem::FFElem(CurvePtr curve, std::vector<RatFn> coeffs) : curve_(std::move(curve)) {
    curve_->require_valid();
    reduce(std::move(coeffs));
}

FFElem FFElem::constant(CurvePtr curve, RatFn c) {
    std::vector<RatFn> v{std::move(c)};
    return FFElem(std::move(curve), std::move(v));
}

FFElem FFElem::monomial(CurvePtr curve, RatFn c, int k) {
    if (k < 0) throw std::invalid_argument("FFElem::monomial: negative power of y");
    std::vector<RatFn> v(static_cast<std::size_t>(k) + 1, RatFn(c.field()));
    v[k] = std::move(c);
    return FFElem(std::move(curve), std::move(v));
}

void FFElem::reduce(std::vector<RatFn> raw) {
    const int n = curve_->degree();
    if (static_cast<int>(raw.size()) < n) raw.resize(static_cast<std::size_t>(n), zero_of(*curve_));
    if (curve_->is_kummer()) {
        const RatFn f(curve_->f());
        for (int k = static_cast<int>(raw.size()) - 1; k >= n; --k) {
            if (raw[k].is_zero()) continue;
            raw[k - n] += raw[k] * f;
        }
    } else {
        const RatFn& r = curve_->r();
        for (int k = static_cast<int>(raw.size()) - 1; k >= n; --k) {
            if (raw[k].is_zero()) continue;
            raw[k - n + 1] += raw[k];
            raw[k - n] += raw[k] * r;
        }
    }
    raw.resize(static_cast<std::size_t>(n), zero_of(*curve_));
    a_ = std::move(raw);
}

bool FFElem::is_zero() const noexcept {
    for (const auto& c : a_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::string FFElem::render() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < a_.size(); ++j) {
        if (a_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << a_[j].render() << ')';
        if (j == 1) os << "*y";
        if (j > 1) os << "*y^" << j;
    }
    return first ? "0" : os.str();
}

FFElem operator+(const FFElem& a, const FFElem& b) {
    require_same_curve(a.curve_, b.curve_);
    FFElem out = a;
    for (std::size_t j = 0; j < out.a_.size(); ++j) {
        if (!b.a_[j].is_zero()) out.a_[j] += b.a_[j];
    }
    return out;
}

FFElem operator-(const FFElem& a, const FFElem& b) { return a + (-b); }

FFElem FFElem::operator-() const {
    FFElem out = *this;
    for (auto& c : out.a_) {
        if (!c.is_zero()) c = -c;
    }
    return out;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    require_same_curve(a.curve_, b.curve_);
    const std::size_t n = a.a_.size();
    std::vector<RatFn> raw(2 * n - 1, zero_of(*a.curve_));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.a_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.a_[j].is_zero()) continue;
            raw[i + j] += a.a_[i] * b.a_[j];
        }
    }
    FFElem out(a.curve_);
    out.reduce(std::move(raw));
    return out;
}

FFElem operator*(const RatFn& c, const FFElem& a) {
    FFElem out = a;
    for (auto& coeff : out.a_) {
        if (!coeff.is_zero()) coeff = c * coeff;
    }
    return out;
}

FFElem FFElem::pow(int e) const {
    if (e < 0) throw std::invalid_argument("FFElem::pow: negative exponent");
    FFElem result = FFElem::constant(curve_, RatFn(Poly::constant(curve_->field(), 1)));
    FFElem base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string FFDiff::render() const {
    if (coeff_.is_zero()) return "0";
    int terms = 0;
    for (const auto& c : coeff_.coeffs()) terms += c.is_zero() ? 0 : 1;
    return terms > 1 ? "[" + coeff_.render() + "] * dx" : coeff_.render() + " * dx";
}

std::string PlaceClass::label() const {
    switch (kind) {
        case PlaceKind::branch:
            return "P[" + std::to_string(branch_index) + "]";
        case PlaceKind::over_zero:
            return "P0";
        case PlaceKind::over_infinity:
            break;
    }
    return "Pinf";
}

std::vector<PlaceClass> place_classes(const Curve& curve) {
    const auto rd = ram_data(curve);
    const int n = curve.degree();
    std::vector<PlaceClass> out;
    for (std::size_t i = 0; i < curve.branch().size(); ++i) {
        PlaceClass pc;
        pc.kind = PlaceKind::branch;
        pc.branch_index = i;
        pc.base = curve.branch()[i].rho;
        pc.above_zero = pc.base.is_zero();
        pc.e = rd.branch[i].e;
        pc.points = rd.branch[i].g;
        pc.v_x = pc.above_zero ? pc.e : 0;
        if (curve.is_kummer()) {
            pc.v_y = rd.branch[i].lambda;
            pc.v_dx = pc.e - 1;
        } else {
            const int l = curve.branch()[i].mult;
            pc.v_y = -l;
            pc.v_dx = (n - 1) * (l + 1);
        }
        out.push_back(pc);
    }
    if (!curve.zero_branch()) {
        PlaceClass pc;
        pc.kind = PlaceKind::over_zero;
        pc.base = curve.field()->zero();
        pc.above_zero = true;
        pc.e = 1;
        pc.points = n;
        pc.v_x = 1;
        pc.v_y = 0;
        pc.v_dx = 0;
        out.push_back(pc);
    }
    PlaceClass inf;
    inf.kind = PlaceKind::over_infinity;
    inf.base = curve.field()->zero();
    inf.e = 1;
    inf.points = n;
    inf.v_x = -1;
    inf.v_y = curve.is_kummer() ? -(curve.total_multiplicity() / n) : 0;
    inf.v_dx = -2;
    out.push_back(inf);
    return out;
}

int base_valuation(const RatFn& a, const PlaceClass& place) {
    if (place.kind == PlaceKind::over_infinity) return place.e * a.degree_valuation();
    return place.e * a.root_multiplicity(place.base);
}

ValuationBound valuation_bound(const FFElem& a, const PlaceClass& place) {
    int best = std::numeric_limits<int>::max();
    int attained = 0;
    for (int j = 0; j < a.size(); ++j) {
        const RatFn& c = a.coeff(j);
        if (c.is_zero()) continue;
        const int v = base_valuation(c, place) + j * place.v_y;
        if (v < best) {
            best = v;
            attained = 1;
        } else if (v == best) {
            ++attained;
        }
    }
    if (attained == 0) throw std::domain_error("valuation of the zero element");
    return {best, place.kind == PlaceKind::branch && attained == 1, attained == 1};
}

ValuationBound valuation_bound(const FFDiff& w, const PlaceClass& place) {
    auto vb = valuation_bound(w.coeff(), place);
    vb.bound += place.v_dx;
    return vb;
}

bool poles_confined_to_classes(const FFElem& a) {
    const Curve& curve = *a.curve();
    std::vector<gf::FieldElement> allowed;
    for (const auto& b : curve.branch()) allowed.push_back(b.rho);
    if (!curve.zero_branch()) allowed.push_back(curve.field()->zero());
    for (const auto& c : a.coeffs()) {
        if (c.is_polynomial()) continue;
        Poly rest = c.den();
        for (const auto& rho : allowed) {
            const int m = poly_root_multiplicity(rest, rho);
            if (m > 0) rest = exact_quotient(rest, Poly::linear(rho).pow(m));
        }
        if (rest.degree() > 0) return false;
    }
    return true;
}

FFElem galois(const FFElem& a, int j) {
    const Curve& curve = *a.curve();
    const int n = curve.degree();
    if (j < 0 || j >= n) throw std::out_of_range("galois: exponent outside [0, degree)");
    const auto& field = curve.field();
    if (j == 0) return a;
    if (curve.is_kummer()) {
        const gf::FieldElement step = curve.zeta().pow(j);
        gf::FieldElement scale = field->one();
        std::vector<RatFn> out;
        out.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            out.push_back(a.coeff(k).is_zero() ? a.coeff(k) : scale * a.coeff(k));
            scale *= step;
        }
        return FFElem(a.curve(), std::move(out));
    }
    // (y + j)^k = sum_i C(k, i) j^{k-i} y^i with binomials mod p.
    const int p = n;
    std::vector<std::vector<int>> binom(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(p), 0));
    for (int k = 0; k < p; ++k) {
        binom[k][0] = 1;
        for (int i = 1; i <= k; ++i) binom[k][i] = (binom[k - 1][i - 1] + (i < k ? binom[k - 1][i] : 0)) % p;
    }
    const gf::FieldElement shift = field->from_integer(j);
    std::vector<RatFn> out(static_cast<std::size_t>(p), RatFn(field));
    for (int k = 0; k < p; ++k) {
        if (a.coeff(k).is_zero()) continue;
        for (int i = 0; i <= k; ++i) {
            const gf::FieldElement c = field->from_integer(binom[k][i]) * shift.pow(k - i);
            if (!c.is_zero()) out[i] += c * a.coeff(k);
        }
    }
    return FFElem(a.curve(), std::move(out));
}

RatFn trace(const FFElem& a) {
    const Curve& curve = *a.curve();
    const auto& field = curve.field();
    if (curve.is_kummer()) return field->from_integer(curve.degree()) * a.coeff(0);
    return -a.coeff(curve.degree() - 1);
}

RatFn trace_by_orbit(const FFElem& a) {
    FFElem sum(a.curve());
    for (int j = 0; j < a.curve()->degree(); ++j) sum = sum + galois(a, j);
    for (int k = 1; k < sum.size(); ++k) {
        if (!sum.coeff(k).is_zero()) throw std::logic_error("trace_by_orbit: orbit sum is not Galois-fixed");
    }
    return sum.coeff(0);
}

RatFn norm(const FFElem& a) {
    FFElem prod = FFElem::constant(a.curve(), RatFn(Poly::constant(a.curve()->field(), 1)));
    for (int j = 0; j < a.curve()->degree(); ++j) prod = prod * galois(a, j);
    for (int k = 1; k < prod.size(); ++k) {
        if (!prod.coeff(k).is_zero()) throw std::logic_error("norm: product of conjugates is not Galois-fixed");
    }
    return prod.coeff(0);
}

FFDiff exterior_d(const FFElem& a) {
    const Curve& curve = *a.curve();
    const auto& field = curve.field();
    const int n = curve.degree();
    std::vector<RatFn> out(static_cast<std::size_t>(n), RatFn(field));
    if (curve.is_kummer()) {
        // dy = (1/n)(f'/f) y dx, so y^j contributes j (f'/(n f)) a_j y^j.
        const RatFn log_der = field->from_integer(n).inverse() * RatFn(curve.f().derivative(), curve.f());
        for (int j = 0; j < n; ++j) {
            const RatFn& c = a.coeff(j);
            if (c.is_zero()) continue;
            out[j] = c.derivative();
            if (j > 0) out[j] += field->from_integer(j) * (c * log_der);
        }
    } else {
        // dy = -r'(x) dx
        const RatFn dy = -curve.r().derivative();
        for (int j = 0; j < n; ++j) {
            const RatFn& c = a.coeff(j);
            if (c.is_zero()) continue;
            out[j] += c.derivative();
            if (j > 0) out[j - 1] += field->from_integer(j) * (c * dy);
        }
    }
    return FFDiff(FFElem(a.curve(), std::move(out)));
}

gf::FieldElement pairing(const FFElem& f, const FFDiff& w) {
    require_same_curve(f.curve(), w.curve());
    const Curve& curve = *f.curve();
    const auto& field = curve.field();
    const gf::FieldElement res = trace(f * w.coeff()).residue_at_infinity();
    if (curve.is_kummer()) return -(res / field->from_integer(curve.degree()));
    return res;
}

}  // namespace cyclo
