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

#include <algorithm>
#include <sstream>

#include "cyclo/polyrat.hpp"

namespace cyclo {

using gf::Code;
using gf::FieldElement;
using gf::FieldPtr;

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c.code()}); }

Poly Poly::constant(const FieldPtr& field, std::int64_t c) { return Poly(field, {field->from_int(c)}); }

Poly Poly::monomial(const FieldElement& c, int k) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<Code> v(static_cast<std::size_t>(k) + 1, 0);
    v[k] = c.code();
    return Poly(c.field(), std::move(v));
}

Poly Poly::x(const FieldPtr& field) { return Poly(field, {0, 1}); }

Poly Poly::linear(const FieldElement& rho) {
    const auto& f = rho.field();
    return Poly(f, {f->neg(rho.code()), 1});
}

Poly Poly::from_ints(const FieldPtr& field, std::initializer_list<std::int64_t> coeffs) {
    return from_ints(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Poly Poly::from_ints(const FieldPtr& field, std::span<const std::int64_t> coeffs) {
    std::vector<Code> v;
    v.reserve(coeffs.size());
    for (std::int64_t c : coeffs) v.push_back(field->from_int(c));
    return Poly(field, std::move(v));
}

FieldElement Poly::coeff(int k) const { return FieldElement(field_, raw(k)); }

FieldElement Poly::leading() const { return FieldElement(field_, c_.empty() ? 0 : c_.back()); }

std::size_t Poly::term_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Code c) { return c != 0; }));
}

FieldElement Poly::evaluate(const FieldElement& at) const {
    gf::require_same_field(field_, at.field());
    Code r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, at.code()), c_[i]);
    return FieldElement(field_, r);
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Code> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        v[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())), c_[i]);
    }
    return Poly(field_, std::move(v));
}

Poly Poly::scaled(Code c) const {
    if (c == 0) return Poly(field_);
    std::vector<Code> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
    return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(field_->inv(c_.back()));
}

Poly Poly::shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<Code> v(static_cast<std::size_t>(k), 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly result = Poly::constant(field_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& b) const {
    gf::require_same_field(field_, b.field_);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < b.degree()) return {Poly(field_), *this};
    std::vector<Code> rem = c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<Code> quo(c_.size() - db, 0);
    const Code lc_inv = field_->inv(b.c_.back());
    for (std::size_t k = rem.size(); k-- > db;) {
        const Code c = rem[k];
        if (c == 0) continue;
        const Code factor = field_->mul(c, lc_inv);
        quo[k - db] = factor;
        for (std::size_t i = 0; i <= db; ++i) {
            rem[k - db + i] = field_->sub(rem[k - db + i], field_->mul(factor, b.c_[i]));
        }
    }
    rem.resize(db);
    return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    gf::require_same_field(a.field_, b.field_);
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = u.divrem(v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

std::pair<Poly, Poly> Poly::split_at_degree(int m, bool inclusive) const {
    const int cut = inclusive ? m + 1 : m;  // low keeps degrees < cut
    if (cut <= 0) return {Poly(field_), *this};
    if (cut >= static_cast<int>(c_.size())) return {*this, Poly(field_)};
    std::vector<Code> low(c_.begin(), c_.begin() + cut);
    std::vector<Code> high(c_.size(), 0);
    std::copy(c_.begin() + cut, c_.end(), high.begin() + cut);
    return {Poly(field_, std::move(low)), Poly(field_, std::move(high))};
}

std::string Poly::render() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << field_->render(c_[k]);
            continue;
        }
        if (c_[k] != 1) os << field_->render(c_[k]) << '*';
        os << 'x';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
    gf::require_same_field(a.field_, b.field_);
    const auto& f = a.field_;
    std::vector<Code> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->add(a.raw(static_cast<int>(i)), b.raw(static_cast<int>(i)));
    return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    gf::require_same_field(a.field_, b.field_);
    const auto& f = a.field_;
    std::vector<Code> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->sub(a.raw(static_cast<int>(i)), b.raw(static_cast<int>(i)));
    return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    gf::require_same_field(a.field_, b.field_);
    const auto& f = a.field_;
    if (a.c_.empty() || b.c_.empty()) return Poly(f);
    std::vector<Code> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const Code ai = a.c_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            v[i + j] = f->add(v[i + j], f->mul(ai, b.c_[j]));
        }
    }
    return Poly(f, std::move(v));
}

Poly operator*(const FieldElement& c, const Poly& a) {
    gf::require_same_field(c.field(), a.field_);
    return a.scaled(c.code());
}

Poly Poly::operator-() const {
    std::vector<Code> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
    return Poly(field_, std::move(v));
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = a.divrem(b);
    if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
    return q;
}

int poly_root_multiplicity(const Poly& a, const FieldElement& rho) {
    if (a.is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
    gf::require_same_field(a.field(), rho.field());
    const auto& f = a.field();
    std::vector<Code> c(a.raw().begin(), a.raw().end());
    int mult = 0;
    // Synthetic division by (x - rho) while the remainder vanishes.
    while (c.size() > 1) {
        std::vector<Code> q(c.size() - 1);
        Code carry = 0;
        for (std::size_t k = c.size(); k-- > 1;) {
            carry = f->add(c[k], f->mul(carry, rho.code()));
            q[k - 1] = carry;
        }
        const Code remainder = f->add(c[0], f->mul(carry, rho.code()));
        if (remainder != 0) break;
        c = std::move(q);
        ++mult;
    }
    return mult;
}

}  // namespace cyclo
