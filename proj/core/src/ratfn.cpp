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

#include "cyclo/polyrat.hpp"

namespace cyclo {

using gf::FieldElement;

namespace {

std::string wrap(const Poly& p) {
    return p.term_count() > 1 ? "(" + p.render() + ")" : p.render();
}

}  // namespace

RatFn::RatFn(gf::FieldPtr field) : num_(field), den_(Poly::constant(field, 1)) {}

RatFn::RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    gf::require_same_field(num_.field(), den_.field());
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    const gf::Code lc = den_.raw(den_.degree());
    if (lc != 1) {
        const gf::Code inv = num_.field()->inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RatFn(den_, num_);
}

RatFn RatFn::derivative() const {
    if (is_polynomial()) return RatFn(num_.derivative());
    return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFn RatFn::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFn(Reduced{}, num_.pow(e), den_.pow(e));
}

int RatFn::root_multiplicity(const FieldElement& rho) const {
    if (is_zero()) throw std::domain_error("root multiplicity of zero");
    return poly_root_multiplicity(num_, rho) - poly_root_multiplicity(den_, rho);
}

int RatFn::degree_valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero at infinity");
    return den_.degree() - num_.degree();
}

FieldElement RatFn::residue_at_infinity() const {
    const auto& f = field();
    if (is_zero()) return f->zero();
    // num = q*den + rem; rem/den = c x^{-1} + O(x^{-2}) with c = rem_{deg den - 1} (den monic).
    const Poly rem = is_polynomial() ? Poly(f) : num_.divrem(den_).second;
    const int target = den_.degree() - 1;
    const gf::Code c = rem.raw(target);
    return FieldElement(f, f->neg(c));
}

std::string RatFn::render() const {
    if (is_polynomial()) return num_.render();
    return wrap(num_) + "/" + wrap(den_);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    const Poly g = Poly::gcd(a.den_, b.den_);
    const Poly bd = g.is_one() ? b.den_ : exact_quotient(b.den_, g);
    const Poly ad = g.is_one() ? a.den_ : exact_quotient(a.den_, g);
    return RatFn(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
    gf::require_same_field(a.field(), b.field());
    if (a.is_zero() || b.is_zero()) return RatFn(a.field());
    // Cross-cancel so the product is reduced without a final gcd.
    Poly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        const Poly g = Poly::gcd(an, bd);
        if (!g.is_one()) {
            an = exact_quotient(an, g);
            bd = exact_quotient(bd, g);
        }
    }
    if (!ad.is_one()) {
        const Poly g = Poly::gcd(bn, ad);
        if (!g.is_one()) {
            bn = exact_quotient(bn, g);
            ad = exact_quotient(ad, g);
        }
    }
    Poly num = an * bn;
    Poly den = ad * bd;
    const gf::Code lc = den.raw(den.degree());
    if (lc != 1) {
        const gf::Code inv = num.field()->inv(lc);
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RatFn(RatFn::Reduced{}, std::move(num), std::move(den));
}

RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

RatFn operator*(const FieldElement& c, const RatFn& a) {
    gf::require_same_field(c.field(), a.field());
    if (c.is_zero()) return RatFn(a.field());
    return RatFn(RatFn::Reduced{}, a.num_.scaled(c.code()), a.den_);
}

RatFn RatFn::operator-() const { return RatFn(Reduced{}, -num_, den_); }

}  // namespace cyclo
