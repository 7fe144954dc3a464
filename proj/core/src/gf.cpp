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

#include "cyclo/gf.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace cyclo::gf {

namespace {

using u64 = std::uint64_t;

constexpr u64 kMaxOrder = u64(1) << 62;
constexpr u64 kTableLimit = u64(1) << 20;

// Operands are reduced mod p < 2^31, so the product fits.
u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Dense polynomials over Z/p, ascending, used only for modulus checks.
using ZpPoly = std::vector<u64>;

void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& m, u64 p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const u64 lc_inv = invmod(m.back(), p);
    while (a.size() > dm) {
        const u64 c = mulmod(a.back(), lc_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    return zp_rem(std::move(r), m, p);
}

ZpPoly zp_powmod(ZpPoly base, u64 e, const ZpPoly& m, u64 p) {
    ZpPoly r{1};
    base = zp_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = zp_mulmod(r, base, m, p);
        base = zp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<u64> out;
    for (u64 d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible_mod_p(std::span<const std::uint64_t> m, std::uint64_t p) {
    ZpPoly mod(m.begin(), m.end());
    trim(mod);
    if (mod.size() < 2) return false;
    const std::size_t d = mod.size() - 1;
    if (d == 1) return true;
    const ZpPoly x{0, 1};
    ZpPoly frob = x;
    for (std::size_t i = 1; i <= d / 2; ++i) {
        frob = zp_powmod(frob, p, mod, p);
        ZpPoly diff = frob;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        const ZpPoly g = zp_gcd(mod, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::int64_t> smallest_irreducible(std::uint64_t p, int d) {
    if (d < 1) throw std::invalid_argument("smallest_irreducible: degree must be >= 1");
    u64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (u64 enc = 0; enc < count; ++enc) {
        ZpPoly m(d + 1, 0);
        u64 v = enc;
        for (int i = 0; i < d; ++i) {
            m[i] = v % p;
            v /= p;
        }
        m[d] = 1;
        if (is_irreducible_mod_p(m, p)) return {m.begin(), m.end()};
    }
    throw std::logic_error("smallest_irreducible: none found");
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b)) throw std::invalid_argument("mismatched fields");
}

FieldPtr Field::make(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(static_cast<u64>(p))) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    }
    const u64 up = static_cast<u64>(p);
    std::vector<u64> mod;
    if (!modulus.empty()) {
        mod.reserve(modulus.size());
        for (std::int64_t c : modulus) {
            std::int64_t r = c % p;
            if (r < 0) r += p;
            mod.push_back(static_cast<u64>(r));
        }
        if (mod.size() < 3) throw std::invalid_argument("field modulus must have degree >= 2");
        if (mod.back() != 1) throw std::invalid_argument("field modulus must be monic");
        if (!is_irreducible_mod_p(mod, up)) {
            throw std::invalid_argument("field modulus is not irreducible over Z/" + std::to_string(p));
        }
    }
    return std::make_shared<const Field>(Private{}, up, std::move(mod));
}

Field::Field(Private, std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), d_(modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < d_; ++i) {
        if (q_ > kMaxOrder / p_) throw std::invalid_argument("field order exceeds 2^62");
        q_ *= p_;
    }
    if (d_ > 1 && q_ <= kTableLimit) build_tables();
}

Code Field::add_digits(Code a, Code b) const noexcept {
    Code r = 0, scale = 1;
    for (int i = 0; i < d_; ++i) {
        Code s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Code Field::neg_digits(Code a) const noexcept {
    Code r = 0, scale = 1;
    for (int i = 0; i < d_; ++i) {
        const Code c = a % p_;
        r += (c == 0 ? 0 : p_ - c) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Code Field::mul_slow(Code a, Code b) const noexcept {
    std::vector<u64> da(d_), db(d_), prod(2 * d_ - 1, 0);
    for (int i = 0; i < d_; ++i) {
        da[i] = a % p_;
        db[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    for (int i = 0; i < d_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < d_; ++j) {
            prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
        }
    }
    // z^d = -(m_0 + ... + m_{d-1} z^{d-1})
    for (int k = 2 * d_ - 2; k >= d_; --k) {
        const u64 c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < d_; ++i) {
            prod[k - d_ + i] = (prod[k - d_ + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
        }
    }
    Code r = 0;
    for (int i = d_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return r;
}

void Field::build_tables() {
    const u64 group = q_ - 1;
    const auto factors = prime_factors(group);
    auto slow_pow = [this](Code a, u64 e) {
        Code r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };
    Code gen = 0;
    for (Code g = 2; g < q_; ++g) {
        bool primitive = true;
        for (u64 f : factors) {
            if (slow_pow(g, group / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0) return;  // q = 2 is a prime field; unreachable for d > 1
    exp_.assign(group, 0);
    log_.assign(q_, 0);
    Code cur = 1;
    for (u64 k = 0; k < group; ++k) {
        exp_[k] = static_cast<std::uint32_t>(cur);
        log_[cur] = static_cast<std::uint32_t>(k);
        cur = mul_slow(cur, gen);
    }
}

Code Field::inv(Code a) const {
    if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
    if (d_ == 1) return invmod(a, p_);
    if (!exp_.empty()) {
        const u64 l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, static_cast<std::int64_t>(q_ - 2));
}

Code Field::pow(Code a, std::int64_t e) const {
    u64 ue = static_cast<u64>(e);
    if (e < 0) {
        if (a == 0) throw std::domain_error("zero raised to a negative power");
        a = inv(a);
        ue = static_cast<u64>(-(e + 1)) + 1;
    }
    if (ue == 0) return 1;
    if (a == 0) return 0;
    ue %= (q_ - 1);
    Code r = 1;
    while (ue) {
        if (ue & 1) r = mul(r, a);
        a = mul(a, a);
        ue >>= 1;
    }
    return r;
}

Code Field::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Code>(r);
}

FieldElement Field::element(Code c) const {
    if (c >= q_) throw std::invalid_argument("field code out of range");
    return {shared_from_this(), c};
}
FieldElement Field::zero() const { return {shared_from_this(), 0}; }
FieldElement Field::one() const { return {shared_from_this(), 1}; }
FieldElement Field::from_integer(std::int64_t v) const { return {shared_from_this(), from_int(v)}; }

FieldElement Field::from_coordinates(std::span<const std::int64_t> coords) const {
    if (coords.size() > static_cast<std::size_t>(d_)) {
        throw std::invalid_argument("field element has " + std::to_string(coords.size()) +
                                    " coordinates; field degree is " + std::to_string(d_));
    }
    Code r = 0;
    for (std::size_t i = coords.size(); i-- > 0;) r = r * p_ + from_int(coords[i]);
    return {shared_from_this(), r};
}

std::vector<std::int64_t> Field::coordinates(Code c) const {
    std::vector<std::int64_t> out(d_);
    for (int i = 0; i < d_; ++i) {
        out[i] = static_cast<std::int64_t>(c % p_);
        c /= p_;
    }
    return out;
}

std::string Field::render(Code c) const {
    if (d_ == 1) return std::to_string(c);
    std::ostringstream os;
    os << '[';
    const auto coords = coordinates(c);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ']';
    return os.str();
}

std::uint64_t Field::multiplicative_order(Code a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    u64 order = q_ - 1;
    for (u64 f : prime_factors(q_ - 1)) {
        while (order % f == 0 && pow(a, static_cast<std::int64_t>(order / f)) == 1) order /= f;
    }
    return order;
}

FieldElement Field::nth_root_of_unity(std::int64_t n) const {
    if (n < 2 || (q_ - 1) % static_cast<u64>(n) != 0) {
        throw std::invalid_argument("no primitive n-th root in field (n = " + std::to_string(n) +
                                    ", q = " + std::to_string(q_) + ")");
    }
    const u64 un = static_cast<u64>(n);
    const u64 cofactor = (q_ - 1) / un;
    // Any element of exact order n generates all of them as c^k, gcd(k, n) = 1.
    Code c = 0;
    for (Code a = 1; a < q_ && c == 0; ++a) {
        const Code cand = pow(a, static_cast<std::int64_t>(cofactor));
        if (multiplicative_order(cand) == un) c = cand;
    }
    if (c == 0) throw std::logic_error("nth_root_of_unity: generator search failed");
    Code best = std::numeric_limits<Code>::max();
    Code cur = 1;
    for (u64 k = 1; k <= un; ++k) {
        cur = mul(cur, c);
        if (std::gcd(k, un) == 1) best = std::min(best, cur);
    }
    return {shared_from_this(), best};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->add(a.code_, b.code_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->sub(a.code_, b.code_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->mul(a.code_, b.code_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->div(a.code_, b.code_)};
}

}  // namespace cyclo::gf
