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

#include "cyclo/cohomology.hpp"

#include <stdexcept>

namespace cyclo {

namespace {

std::string index_label(const char* name, BasisIndex ix) {
    return std::string(name) + "[" + std::to_string(ix.mu) + "," + std::to_string(ix.nu) + "]";
}

/// x^k for any integer k.
RatFn x_power(const gf::FieldPtr& field, int k) {
    const Poly one = Poly::constant(field, 1);
    const Poly xk = Poly::monomial(field->one(), k < 0 ? -k : k);
    return k < 0 ? RatFn(one, xk) : RatFn(xk);
}

int admissible_t(const Curve& curve, const MuTable& table, int mu) {
    // Differential-side and Kummer H^1 side use t^(mu); the AS H^1 side uses t^(p - mu).
    const int key = curve.is_kummer() ? mu : curve.degree() - mu;
    const auto* e = table.find(key);
    return e ? e->t : 0;
}

/// mu values on the H^1 side.
std::vector<int> h1_mu_range(const Curve& curve, RangePolicy policy) {
    std::vector<int> out;
    const int n = curve.degree();
    if (curve.is_kummer()) {
        for (int mu = 1; mu <= n - 1; ++mu) out.push_back(mu);
    } else {
        for (int mu = 1; mu <= n - 1; ++mu) out.push_back(mu);
        if (policy == RangePolicy::extended) out.push_back(n);
    }
    return out;
}

void require_h1_admissible(const Curve& curve, int mu, int nu) {
    const auto table = mu_table(curve, RangePolicy::extended);
    const int lo = 1;
    const int hi = curve.is_kummer() ? curve.degree() - 1 : curve.degree();
    if (mu < lo || mu > hi) throw std::invalid_argument("mu = " + std::to_string(mu) + " is out of range");
    const int t = admissible_t(curve, table, mu);
    if (t < 2 || nu < 1 || nu > t - 1) {
        throw std::invalid_argument(index_label("index", {mu, nu}) + " is not admissible (t = " +
                                    std::to_string(t) + ")");
    }
}

}  // namespace

std::string to_string(SignConvention sign) { return sign == SignConvention::paper ? "paper" : "negated-infty"; }

std::string OmegaElement::label() const { return index_label("omega", index); }
std::string H1Element::label() const { return index_label("h", index); }
std::string DeRhamTriple::label() const { return index_label(kind == TripleKind::a ? "a" : "delta", index); }

BasisIndex dual_index(const Curve& curve, BasisIndex omega_index) {
    if (curve.is_kummer()) return omega_index;
    return {curve.degree() - omega_index.mu, omega_index.nu};
}

std::vector<OmegaElement> omega_basis(const CurvePtr& curve, RangePolicy policy) {
    const auto table = mu_table(*curve, policy);
    const auto& field = curve->field();
    const int n = curve->degree();
    std::vector<OmegaElement> out;
    for (const auto& e : table.entries()) {
        for (int nu = 1; nu <= e.t - 1; ++nu) {
            FFElem coeff(curve);
            if (curve->is_kummer()) {
                const RatFn c(e.g.shifted(nu - 1), curve->f());
                coeff = FFElem::monomial(curve, c, n - e.mu);
            } else {
                const RatFn c(Poly::monomial(field->one(), nu - 1), e.g);
                coeff = FFElem::monomial(curve, c, e.mu);
            }
            out.push_back({{e.mu, nu}, FFDiff(std::move(coeff))});
        }
    }
    return out;
}

std::vector<H1Element> h1_basis(const CurvePtr& curve, RangePolicy policy) {
    const auto table = mu_table(*curve, RangePolicy::extended);
    const auto& field = curve->field();
    const int n = curve->degree();
    std::vector<H1Element> out;
    for (int mu : h1_mu_range(*curve, policy)) {
        const int t = admissible_t(*curve, table, mu);
        for (int nu = 1; nu <= t - 1; ++nu) {
            if (curve->is_kummer()) {
                const RatFn c(Poly::constant(field, 1), table.at(mu).g.shifted(nu));
                out.push_back({{mu, nu}, FFElem::monomial(curve, c, mu)});
            } else {
                const RatFn c(table.at(n - mu).g, Poly::monomial(field->one(), nu));
                out.push_back({{mu, nu}, FFElem::monomial(curve, c, mu - 1)});
            }
        }
    }
    return out;
}

KummerAux kummer_aux(const CurvePtr& curve, int mu, int nu) {
    if (!curve->is_kummer()) throw std::invalid_argument("kummer_aux: not a Kummer curve");
    require_h1_admissible(*curve, mu, nu);
    const auto& field = curve->field();
    const auto rd = ram_data(*curve);
    const auto table = mu_table(*curve, RangePolicy::extended);
    const auto& entry = table.at(mu);
    const int n = curve->degree();
    const auto& branch = curve->branch();

    KummerAux aux{entry.support, Poly(field), Poly::constant(field, 1), Poly(field)};
    Poly prod_support = Poly::constant(field, 1);
    for (std::size_t i : aux.support) prod_support *= Poly::linear(branch[i].rho);

    Poly sum(field);
    for (std::size_t i : aux.support) {
        Poly term = Poly::x(field);
        for (std::size_t j : aux.support) {
            if (j != i) term *= Poly::linear(branch[j].rho);
        }
        sum += field->from_integer(static_cast<std::int64_t>(rd.branch[i].g) * entry.upsilon[i]) * term;
    }
    aux.psi = sum - field->from_integer(static_cast<std::int64_t>(nu) * n) * prod_support;

    for (std::size_t i = 0; i < branch.size(); ++i) {
        const int exponent = entry.upsilon[i] * rd.branch[i].g;
        if (exponent > 0) aux.phi_mu *= Poly::linear(branch[i].rho).pow(exponent);
    }
    aux.gg_product = exact_quotient(curve->f(), prod_support);
    return aux;
}

AsAux as_aux(const CurvePtr& curve, int mu, int nu) {
    if (curve->is_kummer()) throw std::invalid_argument("as_aux: not an Artin-Schreier curve");
    require_h1_admissible(*curve, mu, nu);
    const auto& field = curve->field();
    const int p = curve->degree();
    const auto table = mu_table(*curve, RangePolicy::extended);
    const Poly& g_partner = table.at(p - mu).g;
    const Poly& g_prev = table.at(mu - 1).g;

    AsAux aux{Poly(field), Poly(field), FFDiff(FFElem(curve))};
    aux.phi = Poly::x(field) * g_partner.derivative() * g_prev - field->from_integer(nu) * g_partner * g_prev;

    const auto& branch = curve->branch();
    Poly sum(field);
    for (std::size_t i = 0; i < branch.size(); ++i) {
        Poly term = Poly::constant(field, branch[i].mult);
        for (std::size_t j = 0; j < branch.size(); ++j) {
            if (j != i) term *= Poly::linear(branch[j].rho);
        }
        sum += term;
    }
    aux.psi = curve->f() * sum - curve->f().derivative() * curve->branch_product();

    if (mu >= 2) {
        const RatFn c = field->from_integer(mu - 1) *
                        RatFn(g_partner, curve->pole_polynomial() * curve->branch_product());
        aux.omega_mu = FFDiff(FFElem::monomial(curve, c, mu - 2));
    }
    return aux;
}

namespace {

DeRhamTriple kummer_a(const CurvePtr& curve, const MuTable& table, int mu, int nu, SignConvention sign) {
    const auto& field = curve->field();
    const int n = curve->degree();
    const auto aux = kummer_aux(curve, mu, nu);
    // omega_{n-mu,1} = g_{n-mu} / y^{n-mu} dx = g_{n-mu} y^mu / f dx
    const FFDiff omega_partner(FFElem::monomial(curve, RatFn(table.at(n - mu).g, curve->f()), mu));
    // The degree nu+1 monomial goes to the infinity slot: it multiplies
    // omega_{n-mu,1} by a constant, and that form has a pole over infinity
    // when t^(n-mu) = 1.
    const auto [low, high] = aux.psi.split_at_degree(nu + 1, false);
    const RatFn scale = field->from_integer(n).inverse() * x_power(field, -(nu + 1));
    FFDiff w0 = RatFn(low) * scale * omega_partner;
    FFDiff winf = RatFn(high) * scale * omega_partner;
    if (sign == SignConvention::negated_infty) winf = -winf;
    const RatFn hc(Poly::constant(field, 1), table.at(mu).g.shifted(nu));
    return {TripleKind::a, {mu, nu}, std::move(w0), std::move(winf), FFElem::monomial(curve, hc, mu)};
}

DeRhamTriple as_a(const CurvePtr& curve, const MuTable& table, int mu, int nu, SignConvention sign) {
    const auto& field = curve->field();
    const int p = curve->degree();
    const auto aux = as_aux(curve, mu, nu);
    // omega_{mu-1,1} = y^{mu-1} / g_{mu-1} dx
    const FFDiff omega_prev(
        FFElem::monomial(curve, RatFn(Poly::constant(field, 1), table.at(mu - 1).g), mu - 1));
    const auto [phi_low, phi_high] = aux.phi.split_at_degree(nu + 1, false);
    const auto [psi_low, psi_high] = aux.psi.split_at_degree(nu, false);
    const RatFn inv_x1 = x_power(field, -(nu + 1));
    const RatFn inv_x = x_power(field, -nu);
    FFDiff w0 = (RatFn(phi_low) * inv_x1) * omega_prev + (RatFn(psi_low) * inv_x) * aux.omega_mu;
    FFDiff winf = (RatFn(phi_high) * inv_x1) * omega_prev + (RatFn(psi_high) * inv_x) * aux.omega_mu;
    if (sign == SignConvention::negated_infty) winf = -winf;
    const RatFn hc(table.at(p - mu).g, Poly::monomial(field->one(), nu));
    return {TripleKind::a, {mu, nu}, std::move(w0), std::move(winf), FFElem::monomial(curve, hc, mu - 1)};
}

}  // namespace

std::vector<DeRhamTriple> derham_basis(const CurvePtr& curve, RangePolicy policy, SignConvention sign) {
    const auto table = mu_table(*curve, RangePolicy::extended);
    std::vector<DeRhamTriple> out;
    for (const auto& h : h1_basis(curve, policy)) {
        const int mu = h.index.mu;
        const int nu = h.index.nu;
        out.push_back(curve->is_kummer() ? kummer_a(curve, table, mu, nu, sign)
                                         : as_a(curve, table, mu, nu, sign));
    }
    for (const auto& w : omega_basis(curve, policy)) {
        DeRhamTriple t = map_i(w.omega);
        t.index = w.index;
        out.push_back(std::move(t));
    }
    return out;
}

DeRhamTriple map_i(const FFDiff& omega) {
    return {TripleKind::delta, {}, omega, omega, FFElem(omega.curve())};
}

FFElem map_p(const DeRhamTriple& t) { return t.f0inf; }

FFDiff cocycle_residual(const DeRhamTriple& t) { return exterior_d(t.f0inf) - t.omega0 + t.omega_inf; }

std::vector<gf::FieldElement> h1_coordinates(const std::vector<OmegaElement>& omega, const FFElem& f) {
    const auto& curve = f.curve();
    if (!f.is_zero()) {
        if (!poles_confined_to_classes(f)) {
            throw std::invalid_argument("h1_coordinates: f has poles at unramified finite points");
        }
        for (const auto& pc : place_classes(*curve)) {
            if (pc.kind != PlaceKind::branch || pc.above_zero) continue;
            if (valuation_bound(f, pc).bound < 0) {
                throw std::invalid_argument("h1_coordinates: f has a pole at " + pc.label());
            }
        }
    }
    std::vector<gf::FieldElement> out;
    out.reserve(omega.size());
    for (const auto& w : omega) out.push_back(pairing(f, w.omega));
    return out;
}

std::vector<gf::FieldElement> h1_coordinates(const CurvePtr& curve, const FFElem& f, RangePolicy policy) {
    return h1_coordinates(omega_basis(curve, policy), f);
}

}  // namespace cyclo
