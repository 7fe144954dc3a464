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

#include "cyclo/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclo {

std::string to_string(CoverKind kind) {
    return kind == CoverKind::kummer ? "kummer" : "artin-schreier";
}

std::string to_string(RangePolicy policy) { return policy == RangePolicy::paper ? "paper" : "extended"; }

CurvePtr Curve::kummer(gf::FieldPtr field, int n, std::vector<BranchPoint> branch) {
    Poly unused(field);
    return std::make_shared<const Curve>(Private{}, CoverKind::kummer, std::move(field), n, std::move(unused),
                                         std::move(branch));
}

CurvePtr Curve::artin_schreier(gf::FieldPtr field, Poly f, std::vector<BranchPoint> branch) {
    const int p = static_cast<int>(field->characteristic());
    return std::make_shared<const Curve>(Private{}, CoverKind::artin_schreier, std::move(field), p, std::move(f),
                                         std::move(branch));
}

Curve::Curve(Private, CoverKind kind, gf::FieldPtr field, int degree, Poly f, std::vector<BranchPoint> branch)
    : kind_(kind),
      field_(std::move(field)),
      degree_(degree),
      branch_(std::move(branch)),
      f_(std::move(f)),
      pole_poly_(field_),
      branch_product_(field_),
      r_(field_) {
    check_common();
    if (violations_.empty()) derive();
}

void Curve::check_common() {
    auto add = [this](std::string code, std::string msg) { violations_.push_back({std::move(code), std::move(msg)}); };
    const std::uint64_t p = field_->characteristic();
    const std::uint64_t q = field_->order();

    if (branch_.empty()) add("no_branch_points", "at least one branch point is required");
    bool structural_ok = true;
    for (std::size_t i = 0; i < branch_.size(); ++i) {
        const auto& b = branch_[i];
        if (!b.rho.field() || !gf::same_field(b.rho.field(), field_)) {
            add("field_mismatch", "branch point " + std::to_string(i) + " is not in the curve's field");
            structural_ok = false;
            continue;
        }
        if (b.mult < 1) {
            add("nonpositive_multiplicity", "branch point " + std::to_string(i) + " has multiplicity " +
                                                std::to_string(b.mult));
            structural_ok = false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (branch_[j].rho.field() && branch_[j].rho.code() == b.rho.code()) {
                add("duplicate_branch_point", "branch points " + std::to_string(j) + " and " + std::to_string(i) +
                                                  " coincide");
                structural_ok = false;
            }
        }
        l_ += b.mult;
    }

    if (kind_ == CoverKind::kummer) {
        const int n = degree_;
        if (n < 2) {
            add("n_too_small", "n = " + std::to_string(n) + " must be at least 2");
            return;
        }
        if (l_ % n != 0) {
            add("l_not_multiple_of_n",
                "l = " + std::to_string(l_) + " is not divisible by n = " + std::to_string(n));
        }
        if (std::gcd<std::uint64_t, std::uint64_t>(static_cast<std::uint64_t>(n), p) != 1) {
            add("n_not_coprime_to_p", "n = " + std::to_string(n) + " is divisible by p = " + std::to_string(p));
        }
        if ((q - 1) % static_cast<std::uint64_t>(n) != 0) {
            add("n_not_dividing_q_minus_1",
                "n = " + std::to_string(n) + " does not divide q - 1 = " + std::to_string(q - 1));
        }
        int common = n;
        for (const auto& b : branch_) common = std::gcd(common, b.mult);
        if (!branch_.empty() && common != 1) {
            add("reducible", "gcd(n, l_1, ..., l_r) = " + std::to_string(common) + " so y^n - f(x) factors");
        }
        return;
    }

    if (p < 3) add("characteristic_too_small", "Artin-Schreier covers need p >= 3");
    if (!gf::same_field(f_.field(), field_)) {
        add("field_mismatch", "f is not over the curve's field");
        return;
    }
    if (f_.degree() != l_) {
        add("degree_mismatch", "deg f = " + (f_.is_zero() ? std::string("-inf") : std::to_string(f_.degree())) +
                                   " differs from l = " + std::to_string(l_));
    }
    for (std::size_t i = 0; i < branch_.size(); ++i) {
        const auto& b = branch_[i];
        if (b.mult > 0 && static_cast<std::uint64_t>(b.mult) % p == 0) {
            add("multiplicity_divisible_by_p",
                "l_" + std::to_string(i) + " = " + std::to_string(b.mult) + " is divisible by p");
        }
        if (structural_ok && f_.evaluate(b.rho).is_zero()) {
            add("f_vanishes_at_branch_point", "f vanishes at branch point " + std::to_string(i));
        }
    }
    if (!f_.is_zero() && f_.raw(0) == 0) add("f_vanishes_at_zero", "f(0) = 0");
}

void Curve::derive() {
    pole_poly_ = Poly::constant(field_, 1);
    branch_product_ = Poly::constant(field_, 1);
    for (std::size_t i = 0; i < branch_.size(); ++i) {
        const Poly lin = Poly::linear(branch_[i].rho);
        pole_poly_ *= lin.pow(branch_[i].mult);
        branch_product_ *= lin;
        if (branch_[i].rho.is_zero()) zero_branch_ = i;
    }
    if (kind_ == CoverKind::kummer) {
        f_ = pole_poly_;
        zeta_ = field_->nth_root_of_unity(degree_);
    } else {
        r_ = RatFn(f_, pole_poly_);
    }
}

void Curve::require_valid() const {
    if (valid()) return;
    std::string msg = "invalid curve:";
    for (const auto& v : violations_) msg += " " + v.code;
    throw std::invalid_argument(msg);
}

std::vector<Violation> validate(const Curve& curve) { return curve.violations(); }

RamData ram_data(const Curve& curve) {
    curve.require_valid();
    RamData rd;
    const int n = curve.degree();
    for (const auto& b : curve.branch()) {
        BranchRamification br;
        if (curve.is_kummer()) {
            const int g = std::gcd(n, b.mult);
            br.e = n / g;
            br.g = g;
            br.lambda = b.mult / g;
        } else {
            br.e = n;
            br.g = 1;
        }
        rd.branch.push_back(br);
    }
    if (auto z = curve.zero_branch()) {
        rd.l0 = curve.branch()[*z].mult;
        rd.e0 = rd.branch[*z].e;
        rd.g0 = rd.branch[*z].g;
    } else {
        rd.l0 = curve.is_kummer() ? n : 0;
        rd.e0 = 1;
        rd.g0 = n;
    }
    rd.points_over_infinity = n;
    return rd;
}

const MuEntry* MuTable::find(int mu) const noexcept {
    for (const auto& e : entries_) {
        if (e.mu == mu) return &e;
    }
    return nullptr;
}

const MuEntry& MuTable::at(int mu) const& {
    if (const auto* e = find(mu)) return *e;
    throw std::out_of_range("mu = " + std::to_string(mu) + " is outside the table range");
}

MuTable mu_table(const Curve& curve, RangePolicy policy) {
    curve.require_valid();
    const auto& field = curve.field();
    const auto rd = ram_data(curve);
    const int n = curve.degree();
    const std::size_t r = curve.branch().size();
    std::vector<MuEntry> entries;

    auto make_g = [&](const std::vector<int>& m) {
        Poly g = Poly::constant(field, 1);
        for (std::size_t i = 0; i < r; ++i) {
            if (m[i] > 0) g *= Poly::linear(curve.branch()[i].rho).pow(m[i]);
        }
        return g;
    };

    if (curve.is_kummer()) {
        for (int mu = 1; mu <= n - 1; ++mu) {
            MuEntry e{mu, std::vector<int>(r), std::vector<int>(r), Poly(field), 0, {}};
            int weighted = 0;
            for (std::size_t i = 0; i < r; ++i) {
                const auto& br = rd.branch[i];
                const int num = mu * br.lambda;
                e.m[i] = num / br.e;
                e.upsilon[i] = num % br.e;
                weighted += br.g * e.upsilon[i];
                if (e.upsilon[i] != 0) e.support.push_back(i);
            }
            if (weighted % n != 0) throw std::logic_error("t^(mu) is not an integer");
            e.t = weighted / n;
            e.g = make_g(e.m);
            entries.push_back(std::move(e));
        }
        return MuTable(policy, std::move(entries));
    }

    const int p = n;
    const int first = policy == RangePolicy::extended ? 0 : 1;
    for (int mu = first; mu <= p - 1; ++mu) {
        MuEntry e{mu, std::vector<int>(r), std::vector<int>(r), Poly(field), 0, {}};
        for (std::size_t i = 0; i < r; ++i) {
            const int num = (p - 1 - mu) * curve.branch()[i].mult + (p - 1);
            e.m[i] = num / p;
            e.upsilon[i] = num % p;
            e.t += e.m[i];
        }
        e.g = make_g(e.m);
        entries.push_back(std::move(e));
    }
    return MuTable(policy, std::move(entries));
}

int genus_rh(const Curve& curve) {
    const auto rd = ram_data(curve);
    const int n = curve.degree();
    int canonical = -2 * n;
    for (std::size_t i = 0; i < rd.branch.size(); ++i) {
        if (curve.is_kummer()) {
            canonical += rd.branch[i].g * (rd.branch[i].e - 1);
        } else {
            canonical += (n - 1) * (curve.branch()[i].mult + 1);
        }
    }
    return (canonical + 2) / 2;
}

int genus_from_basis(const Curve& curve, RangePolicy policy) {
    int g = 0;
    const auto table = mu_table(curve, policy);
    for (const auto& e : table.entries()) g += std::max(e.t - 1, 0);
    return g;
}

}  // namespace cyclo
