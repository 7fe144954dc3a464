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

#include "cyclo/verify.hpp"

#include <functional>
#include <stdexcept>

namespace cyclo {

namespace {

/// Accumulates problems for one check; fail dominates inconclusive.
class Collector {
public:
    void fail(std::string msg, Json item = Json::object()) {
        failed_ = true;
        add(std::move(msg), std::move(item));
    }
    void inconclusive(std::string msg, Json item = Json::object()) {
        unsure_ = true;
        add(std::move(msg), std::move(item));
    }

    CheckResult finish(std::string name, std::string ok_details, Json extra = Json::object()) const {
        CheckResult r;
        r.name = std::move(name);
        r.status = failed_ ? CheckStatus::fail : unsure_ ? CheckStatus::inconclusive : CheckStatus::pass;
        r.details = messages_.empty() ? std::move(ok_details) : messages_.front();
        if (messages_.size() > 1) r.details += " (+" + std::to_string(messages_.size() - 1) + " more)";
        r.payload = std::move(extra);
        if (!items_.empty()) r.payload["problems"] = items_;
        return r;
    }

private:
    void add(std::string msg, Json item) {
        messages_.push_back(msg);
        item["message"] = std::move(msg);
        items_.push_back(std::move(item));
    }

    bool failed_ = false;
    bool unsure_ = false;
    std::vector<std::string> messages_;
    Json items_ = Json::array();
};

RatFn rat_one(const gf::FieldPtr& field) { return RatFn(Poly::constant(field, 1)); }

/// Sum over the roots of a polynomial that are not in `bases`, counted with
/// multiplicity.
int degree_away_from(Poly a, const std::vector<gf::FieldElement>& bases) {
    for (const auto& b : bases) {
        const int m = poly_root_multiplicity(a, b);
        if (m > 0) a = exact_quotient(a, Poly::linear(b).pow(m));
    }
    return a.degree();
}

/// Compares one function's divisor with closed-form values per place class.
void check_divisor(Collector& out, const std::string& name, const FFElem& h,
                   const std::vector<PlaceClass>& classes, const std::function<int(const PlaceClass&)>& expected) {
    const RatFn nh = norm(h);
    std::vector<gf::FieldElement> bases;
    int weighted = 0;
    for (const auto& pc : classes) {
        const int e = expected(pc);
        weighted += pc.points * e;
        const auto vb = valuation_bound(h, pc);
        Json item{{"function", name}, {"place", pc.label()}, {"expected", e}, {"bound", vb.bound}};
        if (vb.unique_minimum ? vb.bound != e : vb.bound > e) {
            out.fail("v_" + pc.label() + "(" + name + ") = " + std::to_string(vb.bound) + ", expected " +
                         std::to_string(e),
                     item);
        } else if (!vb.unique_minimum && vb.bound != e) {
            out.inconclusive("v_" + pc.label() + "(" + name + ") only bounded by " + std::to_string(vb.bound), item);
        }
        // Norm side: ord_a N(h) = sum over the points above a.
        const int ord = pc.kind == PlaceKind::over_infinity ? nh.degree_valuation() : nh.root_multiplicity(pc.base);
        if (ord != pc.points * e) {
            item["norm_order"] = ord;
            out.fail("norm of " + name + " has order " + std::to_string(ord) + " at " + pc.label() + ", expected " +
                         std::to_string(pc.points * e),
                     item);
        }
        if (pc.kind != PlaceKind::over_infinity) bases.push_back(pc.base);
    }
    const int rest = degree_away_from(nh.num(), bases) - degree_away_from(nh.den(), bases);
    if (weighted + rest != 0) {
        out.fail("divisor of " + name + " has degree " + std::to_string(weighted + rest),
                 Json{{"function", name}, {"degree", weighted + rest}});
    }
}

void check_regular(Collector& out, const std::string& name, const std::string& slot, const FFElem& a,
                   const std::vector<PlaceClass>& classes, const std::function<bool(const PlaceClass&)>& skip,
                   int dx_shift_flag) {
    if (a.is_zero()) return;
    if (!poles_confined_to_classes(a)) {
        out.fail(name + " " + slot + " has a pole at an unramified finite point", Json{{"slot", slot}});
    }
    for (const auto& pc : classes) {
        if (skip(pc)) continue;
        const auto vb = dx_shift_flag ? valuation_bound(FFDiff(a), pc) : valuation_bound(a, pc);
        if (vb.bound >= 0) continue;
        Json item{{"slot", slot}, {"place", pc.label()}, {"bound", vb.bound}, {"exact", vb.exact}};
        const std::string msg = name + " " + slot + " has valuation " + std::string(vb.unique_minimum ? "" : ">= ") +
                                std::to_string(vb.bound) + " at " + pc.label();
        if (vb.exact || vb.unique_minimum) {
            out.fail(msg, item);
        } else {
            out.inconclusive(msg, item);
        }
    }
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(encode(v));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::inconclusive:
            break;
    }
    return "inconclusive";
}

Json encode(const gf::FieldElement& a) {
    if (a.field()->is_prime_field()) return Json(a.code());
    Json out = Json::array();
    for (auto c : a.coordinates()) out.push_back(c);
    return out;
}

DualityResult duality_matrix(const CurvePtr& curve, RangePolicy policy) {
    return duality_matrix(omega_basis(curve, policy), h1_basis(curve, policy));
}

DualityResult duality_matrix(const std::vector<OmegaElement>& omega, const std::vector<H1Element>& h) {
    DualityResult res;
    std::vector<bool> used(h.size(), false);
    Collector out;
    for (const auto& w : omega) {
        const BasisIndex want = dual_index(*w.omega.curve(), w.index);
        bool found = false;
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (!used[k] && h[k].index == want) {
                used[k] = true;
                res.columns.push_back(h[k]);
                found = true;
                break;
            }
        }
        if (!found) out.fail(w.label() + " has no dual partner in the h basis", Json{{"row", w.label()}});
    }
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (!used[k]) {
            res.columns.push_back(h[k]);
            out.fail(h[k].label() + " has no dual partner in the omega basis", Json{{"column", h[k].label()}});
        }
    }
    for (std::size_t r = 0; r < omega.size(); ++r) {
        std::vector<gf::FieldElement> row;
        for (std::size_t c = 0; c < res.columns.size(); ++c) {
            row.push_back(pairing(res.columns[c].h, omega[r].omega));
            const bool want_one = r == c;
            if (want_one ? !row.back().is_one() : !row.back().is_zero()) {
                out.fail("<" + omega[r].label() + ", " + res.columns[c].label() + "> = " + row.back().to_string(),
                         Json{{"row", r}, {"column", c}, {"value", encode(row.back())}});
            }
        }
        res.matrix.push_back(std::move(row));
    }
    Json rows = Json::array();
    for (const auto& w : omega) rows.push_back(w.label());
    Json cols = Json::array();
    for (const auto& c : res.columns) cols.push_back(c.label());
    res.check = out.finish("duality",
                           std::to_string(omega.size()) + "x" + std::to_string(res.columns.size()) + " identity",
                           Json{{"rows", rows}, {"columns", cols}, {"matrix", matrix_json(res.matrix)}});
    return res;
}

CheckResult cocycle_check(const DeRhamTriple& t) {
    Collector out;
    const FFDiff residual = cocycle_residual(t);
    if (!residual.is_zero()) out.fail("d f - w0 + w_inf = " + residual.render(), Json{{"residual", residual.render()}});
    return out.finish("cocycle:" + t.label(), "d f = w0 - w_inf");
}

CheckResult locus_check(const DeRhamTriple& t) {
    Collector out;
    const auto classes = place_classes(*t.f0inf.curve());
    const std::string name = t.label();
    check_regular(out, name, "w0", t.omega0.coeff(), classes, [](const PlaceClass& pc) { return pc.above_zero; }, 1);
    check_regular(out, name, "w_inf", t.omega_inf.coeff(), classes,
                  [](const PlaceClass& pc) { return pc.kind == PlaceKind::over_infinity; }, 1);
    check_regular(out, name, "f", t.f0inf, classes,
                  [](const PlaceClass& pc) { return pc.kind != PlaceKind::branch || pc.above_zero; }, 0);
    return out.finish("locus:" + name, "pole loci respected");
}

CheckResult divisor_checks(const CurvePtr& curve) {
    Collector out;
    const auto& field = curve->field();
    const auto classes = place_classes(*curve);
    const auto rd = ram_data(*curve);
    const auto table = mu_table(*curve, RangePolicy::extended);
    const int n = curve->degree();
    const auto& branch = curve->branch();
    const RatFn one = rat_one(field);
    const FFElem x = FFElem::constant(curve, RatFn(Poly::x(field)));
    const FFElem y = FFElem::monomial(curve, one, 1);

    auto x_div = [&](const PlaceClass& pc) {
        switch (pc.kind) {
            case PlaceKind::branch:
                return pc.above_zero ? (curve->is_kummer() ? rd.branch[pc.branch_index].e : n) : 0;
            case PlaceKind::over_zero:
                return 1;
            case PlaceKind::over_infinity:
                break;
        }
        return -1;
    };
    check_divisor(out, "x", x, classes, x_div);

    int checked = 1;
    if (curve->is_kummer()) {
        const int t = curve->total_multiplicity() / n;
        check_divisor(out, "y", y, classes, [&](const PlaceClass& pc) {
            if (pc.kind == PlaceKind::branch) return rd.branch[pc.branch_index].lambda;
            return pc.kind == PlaceKind::over_infinity ? -t : 0;
        });
        ++checked;
        for (const auto& e : table.entries()) {
            const FFElem h = FFElem::monomial(curve, RatFn(Poly::constant(field, 1), e.g), e.mu);
            check_divisor(out, "y^" + std::to_string(e.mu) + "/g_" + std::to_string(e.mu), h, classes,
                          [&](const PlaceClass& pc) {
                              if (pc.kind == PlaceKind::branch) return e.upsilon[pc.branch_index];
                              return pc.kind == PlaceKind::over_infinity ? -e.t : 0;
                          });
            ++checked;
        }
    } else {
        check_divisor(out, "y", y, classes, [&](const PlaceClass& pc) {
            return pc.kind == PlaceKind::branch ? -branch[pc.branch_index].mult : 0;
        });
        const int l = curve->total_multiplicity();
        check_divisor(out, "prod(x-rho_i)^l_i", FFElem::constant(curve, RatFn(curve->pole_polynomial())), classes,
                      [&](const PlaceClass& pc) {
                          if (pc.kind == PlaceKind::branch) return n * branch[pc.branch_index].mult;
                          return pc.kind == PlaceKind::over_infinity ? -l : 0;
                      });
        checked += 2;
        for (const auto& e : table.entries()) {
            check_divisor(out, "g_" + std::to_string(e.mu), FFElem::constant(curve, RatFn(e.g)), classes,
                          [&](const PlaceClass& pc) {
                              if (pc.kind == PlaceKind::branch) return n * e.m[pc.branch_index];
                              return pc.kind == PlaceKind::over_infinity ? -e.t : 0;
                          });
            ++checked;
        }
        for (int mu = 1; mu <= n; ++mu) {
            const auto& e = table.at(n - mu);
            const FFElem h = FFElem::monomial(curve, RatFn(e.g), mu - 1);
            check_divisor(out, "g_" + std::to_string(n - mu) + "*y^" + std::to_string(mu - 1), h, classes,
                          [&](const PlaceClass& pc) {
                              if (pc.kind == PlaceKind::branch) return n - 1 - e.upsilon[pc.branch_index];
                              return pc.kind == PlaceKind::over_infinity ? -e.t : 0;
                          });
            ++checked;
        }
    }

    // (dx): closed form per class, total degree against the basis genus.
    const FFDiff dx(FFElem::constant(curve, one));
    int deg_dx = 0;
    for (const auto& pc : classes) {
        int want = 0;
        if (pc.kind == PlaceKind::branch) {
            want = curve->is_kummer() ? rd.branch[pc.branch_index].e - 1 : (n - 1) * (branch[pc.branch_index].mult + 1);
        } else if (pc.kind == PlaceKind::over_infinity) {
            want = -2;
        }
        const auto vb = valuation_bound(dx, pc);
        if (vb.bound != want) {
            out.fail("v_" + pc.label() + "(dx) = " + std::to_string(vb.bound) + ", expected " + std::to_string(want),
                     Json{{"function", "dx"}, {"place", pc.label()}});
        }
        deg_dx += pc.points * want;
    }
    const int g = genus_from_basis(*curve, RangePolicy::extended);
    if (deg_dx != 2 * g - 2) {
        out.fail("deg(dx) = " + std::to_string(deg_dx) + " but 2g - 2 = " + std::to_string(2 * g - 2),
                 Json{{"function", "dx"}, {"degree", deg_dx}});
    }
    ++checked;
    return out.finish("divisors", std::to_string(checked) + " divisors match",
                      Json{{"functions", checked}, {"deg_dx", deg_dx}, {"genus", g}});
}

CheckResult identity_checks(const CurvePtr& curve) {
    Collector out;
    const auto& field = curve->field();
    const int n = curve->degree();
    const auto& branch = curve->branch();
    const auto rd = ram_data(*curve);
    const auto table = mu_table(*curve, RangePolicy::extended);
    const FFElem y = FFElem::monomial(curve, rat_one(field), 1);
    const FFDiff dy = exterior_d(y);
    int checked = 0;

    if (curve->is_kummer()) {
        // n y^{n-1} dy = f' dx
        const FFElem lhs = field->from_integer(n) * RatFn(Poly::constant(field, 1)) * y.pow(n - 1) * dy.coeff();
        if (!(lhs == FFElem::constant(curve, RatFn(curve->f().derivative())))) {
            out.fail("n y^(n-1) dy != f' dx", Json{{"identity", "defining_equation"}});
        }
        ++checked;
        for (const auto& e : table.entries()) {
            const std::string tag = "mu=" + std::to_string(e.mu);
            const auto& partner = table.at(n - e.mu);
            Poly prod_support = Poly::constant(field, 1);
            for (std::size_t i : e.support) prod_support *= Poly::linear(branch[i].rho);
            // g_mu g_{n-mu} prod_{I} (x - rho_i) = f
            if (!(e.g * partner.g * prod_support == curve->f())) {
                out.fail("g_mu g_(n-mu) prod_I != f at " + tag, Json{{"identity", "gg"}, {"mu", e.mu}});
            }
            Poly phi = Poly::constant(field, 1);
            Poly sum(field);
            for (std::size_t i = 0; i < branch.size(); ++i) {
                const int ex = e.upsilon[i] * rd.branch[i].g;
                if (ex > 0) phi *= Poly::linear(branch[i].rho).pow(ex);
            }
            for (std::size_t i : e.support) {
                Poly term = Poly::constant(field, 1);
                for (std::size_t j : e.support) {
                    if (j != i) term *= Poly::linear(branch[j].rho);
                }
                sum += field->from_integer(static_cast<std::int64_t>(e.upsilon[i]) * rd.branch[i].g) * term;
            }
            // phi' prod_I = phi * sum_I upsilon_i (n, l_i) prod_{I \ i}
            if (!(phi.derivative() * prod_support == phi * sum)) {
                out.fail("log-derivative identity fails at " + tag, Json{{"identity", "logder"}, {"mu", e.mu}});
            }
            // phi_mu g_mu^n = f^mu
            if (!(phi * e.g.pow(n) == curve->f().pow(e.mu))) {
                out.fail("phi_mu g_mu^n != f^mu at " + tag, Json{{"identity", "phi"}, {"mu", e.mu}});
            }
            if (e.t >= 2) {
                for (int nu = 1; nu <= e.t - 1; ++nu) {
                    const auto aux = kummer_aux(curve, e.mu, nu);
                    if (!(aux.gg_product == e.g * partner.g) || !(aux.phi_mu == phi)) {
                        out.fail("auxiliary polynomials disagree at " + tag, Json{{"identity", "aux"}, {"mu", e.mu}});
                    }
                    // psi = prod_I * (x * sum g_i upsilon_i / (x - rho_i) - nu n)
                    const Poly want = Poly::x(field) * sum - field->from_integer(static_cast<std::int64_t>(nu) * n) *
                                                                prod_support;
                    if (!(aux.psi == want)) {
                        out.fail("psi mismatch at " + tag, Json{{"identity", "psi"}, {"mu", e.mu}, {"nu", nu}});
                    }
                }
            }
            checked += 3;
        }
    } else {
        const int p = n;
        // (p y^{p-1} - 1) dy = r' dx reduces to -dy = r' dx
        if (!(dy.coeff() == FFElem::constant(curve, -curve->r().derivative()))) {
            out.fail("dy != -r' dx", Json{{"identity", "defining_equation"}});
        }
        // dy = psi / prod (x - rho_i)^{l_i + 1} dx, psi from its closed form
        Poly sum(field);
        for (std::size_t i = 0; i < branch.size(); ++i) {
            Poly term = Poly::constant(field, branch[i].mult);
            for (std::size_t j = 0; j < branch.size(); ++j) {
                if (j != i) term *= Poly::linear(branch[j].rho);
            }
            sum += term;
        }
        const Poly psi = curve->f() * sum - curve->f().derivative() * curve->branch_product();
        const RatFn dy_closed(psi, curve->pole_polynomial() * curve->branch_product());
        if (!(dy.coeff() == FFElem::constant(curve, dy_closed))) {
            out.fail("dy != psi / prod (x - rho_i)^(l_i + 1) dx", Json{{"identity", "dy_psi"}});
        }
        checked += 2;
        for (int mu = 1; mu <= p; ++mu) {
            const auto& e = table.at(p - mu);
            for (std::size_t i = 0; i < branch.size(); ++i) {
                const int lhs = p * e.m[i] - (mu - 1) * branch[i].mult;
                const int rhs = p - 1 - e.upsilon[i];
                if (lhs != rhs || lhs < 0) {
                    out.fail("exponent identity fails at mu=" + std::to_string(mu) + ", i=" + std::to_string(i),
                             Json{{"identity", "extrael2"}, {"mu", mu}, {"i", i}, {"lhs", lhs}, {"rhs", rhs}});
                }
                ++checked;
            }
        }
    }
    return out.finish("identities", std::to_string(checked) + " identities hold", Json{{"identities", checked}});
}

CheckResult dimension_check(const CurvePtr& curve, RangePolicy policy) {
    Collector out;
    const int g = genus_rh(*curve);
    const auto w = omega_basis(curve, policy).size();
    const auto h = h1_basis(curve, policy).size();
    const auto d = derham_basis(curve, policy).size();
    const Json counts{{"genus", g}, {"omega", w}, {"h1", h}, {"derham", d}};
    if (static_cast<int>(w) != g || static_cast<int>(h) != g || static_cast<int>(d) != 2 * g) {
        out.fail("(" + std::to_string(w) + ", " + std::to_string(h) + ", " + std::to_string(d) + ") vs genus " +
                     std::to_string(g),
                 counts);
    }
    return out.finish("dimension",
                      "(" + std::to_string(w) + ", " + std::to_string(h) + ", " + std::to_string(d) + ") = (g, g, 2g)",
                      counts);
}

CheckResult basis_regularity_check(const std::vector<OmegaElement>& omega, const std::vector<H1Element>& h) {
    Collector out;
    for (const auto& w : omega) {
        const auto classes = place_classes(*w.omega.curve());
        check_regular(out, w.label(), "omega", w.omega.coeff(), classes, [](const PlaceClass&) { return false; }, 1);
    }
    for (const auto& e : h) {
        const auto classes = place_classes(*e.h.curve());
        check_regular(out, e.label(), "h", e.h, classes,
                      [](const PlaceClass& pc) { return pc.kind != PlaceKind::branch || pc.above_zero; }, 0);
    }
    return out.finish("basis_regularity", "omega holomorphic, h regular off 0 and infinity");
}

CheckResult exactness_check(const std::vector<OmegaElement>& omega, const std::vector<DeRhamTriple>& derham,
                            const CheckResult& duality) {
    Collector out;
    if (!duality.passed()) {
        out.fail("not evaluated: duality matrix is not the identity");
        return out.finish("exactness", "");
    }
    const std::size_t g = omega.size();
    // (a) p(i(w)) has zero coordinates
    for (const auto& w : omega) {
        const auto coords = h1_coordinates(omega, map_p(map_i(w.omega)));
        for (const auto& c : coords) {
            if (!c.is_zero()) out.fail("p(i(" + w.label() + ")) is not zero in H^1", Json{{"part", "a"}});
        }
    }
    // (b) the a-family maps onto the h basis; (c) the delta-family lies in the kernel
    std::vector<int> hits(g, 0);
    for (const auto& t : derham) {
        if (t.kind == TripleKind::delta) {
            if (!map_p(t).is_zero()) out.fail(t.label() + " has nonzero third slot", Json{{"part", "c"}});
            continue;
        }
        const auto coords = h1_coordinates(omega, map_p(t));
        int ones = 0;
        std::size_t where = 0;
        bool clean = true;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (coords[k].is_one()) {
                ++ones;
                where = k;
            } else if (!coords[k].is_zero()) {
                clean = false;
            }
        }
        if (!clean || ones != 1) {
            out.fail("p(" + t.label() + ") is not a unit coordinate vector", Json{{"part", "b"}});
        } else {
            ++hits[where];
        }
    }
    for (std::size_t k = 0; k < g; ++k) {
        if (hits[k] != 1) {
            out.fail("coordinate " + std::to_string(k) + " is hit " + std::to_string(hits[k]) + " times",
                     Json{{"part", "b"}, {"coordinate", k}});
        }
    }
    return out.finish("exactness", "0 -> H0(Omega) -> H1_dR -> H1(O) -> 0 realized on the bases");
}

CheckResult sign_adjudication(const CurvePtr& curve, RangePolicy policy) {
    Collector out;
    const auto fixed = derham_basis(curve, policy, SignConvention::negated_infty);
    const auto verbatim = derham_basis(curve, policy, SignConvention::paper);
    int a_count = 0;
    int vanishing = 0;
    const RatFn two(Poly::constant(curve->field(), 2));
    for (std::size_t k = 0; k < fixed.size(); ++k) {
        if (fixed[k].kind != TripleKind::a) continue;
        ++a_count;
        if (!cocycle_residual(fixed[k]).is_zero()) {
            out.fail(fixed[k].label() + " is not a cocycle under negated-infty", Json{{"triple", fixed[k].label()}});
        }
        const FFDiff residual = cocycle_residual(verbatim[k]);
        if (!(residual == two * verbatim[k].omega_inf)) {
            out.fail(verbatim[k].label() + " residual under paper sign differs from 2 w_inf",
                     Json{{"triple", verbatim[k].label()}, {"residual", residual.render()}});
        }
        if (verbatim[k].omega_inf.is_zero()) ++vanishing;
    }
    return out.finish("sign_adjudication",
                      std::to_string(a_count) + " a-triples: cocycle under negated-infty, residual 2 w_inf under paper",
                      Json{{"a_triples", a_count}, {"zero_w_inf", vanishing}});
}

Report full_report(const CurvePtr& curve, const VerifyOptions& options) {
    Report rep;
    {
        CheckResult v;
        v.name = "validate";
        Json list = Json::array();
        for (const auto& viol : curve->violations()) {
            list.push_back(Json{{"code", viol.code}, {"message", viol.message}});
        }
        v.payload = Json{{"violations", list}};
        if (curve->valid()) {
            v.details = "all hypotheses hold";
        } else {
            v.status = CheckStatus::fail;
            v.details = curve->violations().front().code + ": " + curve->violations().front().message;
        }
        rep.checks.push_back(std::move(v));
        if (!curve->valid()) {
            rep.all_pass = false;
            return rep;
        }
    }
    rep.omega = omega_basis(curve, options.policy);
    rep.h1 = h1_basis(curve, options.policy);
    rep.derham = derham_basis(curve, options.policy, options.sign);

    rep.checks.push_back(divisor_checks(curve));
    rep.checks.push_back(identity_checks(curve));
    rep.checks.push_back(dimension_check(curve, options.policy));
    auto duality = duality_matrix(rep.omega, rep.h1);
    rep.pairing_matrix = duality.matrix;
    rep.checks.push_back(duality.check);
    rep.checks.push_back(basis_regularity_check(rep.omega, rep.h1));
    for (const auto& t : rep.derham) {
        rep.checks.push_back(cocycle_check(t));
        rep.checks.push_back(locus_check(t));
    }
    rep.checks.push_back(exactness_check(rep.omega, rep.derham, duality.check));
    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.passed();
    return rep;
}

}  // namespace cyclo
