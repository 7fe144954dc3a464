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

#include <random>

#include <gtest/gtest.h>

#include "cyclo/funcfield.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace cyclo;

RatFn R(const gf::FieldPtr& f, std::initializer_list<std::int64_t> num, std::initializer_list<std::int64_t> den = {1}) {
    return RatFn(Poly::from_ints(f, num), Poly::from_ints(f, den));
}

FFElem y_of(const CurvePtr& c) { return FFElem::monomial(c, RatFn::constant(c->field()->one()), 1); }

const PlaceClass& place(const std::vector<PlaceClass>& all, PlaceKind kind, std::size_t index = 0) {
    for (const auto& p : all) {
        if (p.kind == kind && (kind != PlaceKind::branch || p.branch_index == index)) return p;
    }
    throw std::logic_error("no such place");
}

/// One small curve per characteristic used for the trace table.
CurvePtr as_curve(int p) {
    if (p == 3) return fixture::as_f3();
    return fixture::artin_schreier(p, {1, 1}, {{2, 1}});
}

CurvePtr kummer_f25() {
    // y^3 = x (x - 1) (x - z) over F_25 = F_5[z]/(z^2 + 2).
    auto f = gf::Field::make(5, {2, 0, 1});
    const std::int64_t zc[] = {0, 1};
    return Curve::kummer(f, 3, {{f->zero(), 1}, {f->one(), 1}, {f->from_coordinates(zc), 1}});
}

TEST(FFElem, ReductionExamples) {
    const auto q = fixture::quartic();
    const auto y = y_of(q);
    const auto yy = y * y;
    EXPECT_EQ(yy.coeff(0), RatFn(q->f()));
    EXPECT_TRUE(yy.coeff(1).is_zero());

    const auto as = fixture::as_f3();
    const auto ya = y_of(as);
    const auto y3 = (ya * ya) * ya;
    EXPECT_EQ(y3.coeff(0), as->r());
    EXPECT_TRUE(y3.coeff(1) == RatFn::constant(as->field()->one()));
    EXPECT_TRUE(y3.coeff(2).is_zero());
    EXPECT_EQ(y3, ya.pow(3));

    const auto z = FFElem::monomial(q, R(q->field(), {1, 2}), 1);
    EXPECT_EQ(z + FFElem(q), z);
    EXPECT_EQ(FFElem::monomial(q, R(q->field(), {1}), 5), FFElem::monomial(q, RatFn(q->f().pow(2)), 1));
}

TEST(FFElem, RenderAndErrors) {
    const auto q = fixture::quartic();
    EXPECT_EQ(FFElem(q).render(), "0");
    EXPECT_EQ(FFElem(q, {R(q->field(), {1}), R(q->field(), {1}, {4, 0, 0, 0, 1})}).render(),
              "(1) + (1/(4 + x^4))*y");
    const auto other = fixture::kummer(5, 2, {{1, 1}, {2, 1}});
    EXPECT_THROW((void)(y_of(q) * y_of(other)), std::invalid_argument);
    EXPECT_THROW((void)pairing(y_of(q), FFDiff(y_of(other))), std::invalid_argument);
    EXPECT_THROW((void)FFElem(fixture::kummer(5, 3, {{1, 1}})), std::invalid_argument);
}

TEST(Galois, Examples) {
    const auto q = fixture::quartic();
    const auto zeta = q->zeta();
    EXPECT_EQ(galois(y_of(q), 1), FFElem::monomial(q, RatFn::constant(zeta), 1));
    const auto as = fixture::as_f3();
    EXPECT_EQ(galois(y_of(as), 1), y_of(as) + FFElem::constant(as, RatFn::constant(as->field()->one())));
    std::mt19937_64 rng(1);
    const auto a = oracle::random_elem(as, rng, 3);
    EXPECT_EQ(galois(a, 0), a);
}

TEST(Galois, IsAutomorphismFixingBase) {
    std::mt19937_64 rng(2);
    for (const auto& c : {fixture::quartic(), fixture::as_f3(), kummer_f25(), as_curve(5)}) {
        for (int k = 0; k < 20; ++k) {
            const auto a = oracle::random_elem(c, rng, 3);
            const auto b = oracle::random_elem(c, rng, 3);
            const auto r = oracle::random_ratfn(c->field(), rng, 3);
            for (int j = 0; j < c->degree(); ++j) {
                EXPECT_EQ(galois(a * b, j), galois(a, j) * galois(b, j));
                EXPECT_EQ(galois(a + b, j), galois(a, j) + galois(b, j));
                EXPECT_EQ(galois(FFElem::constant(c, r), j), FFElem::constant(c, r));
            }
            // sigma^n is the identity.
            FFElem it = a;
            for (int j = 0; j < c->degree(); ++j) it = galois(it, 1);
            EXPECT_EQ(it, a);
        }
    }
}

TEST(Trace, Examples) {
    const auto q = fixture::quartic();
    EXPECT_EQ(trace(FFElem::constant(q, RatFn::constant(q->field()->one()))), RatFn::constant(q->field()->from_integer(2)));
    const auto as = fixture::as_f3();
    EXPECT_EQ(trace(y_of(as).pow(2)), RatFn::constant(as->field()->from_integer(2)));
    EXPECT_TRUE(trace(y_of(as)).is_zero());
}

// Tr(y^k) by orbit summation: 0 for 1 <= k <= p-2, -1 for k = p-1; then
// coefficient rule against orbit sum on 100 random elements per p.
TEST(Trace, TableAndOrbitAgreement) {
    std::mt19937_64 rng(4);
    for (int p : {3, 5, 7}) {
        const auto c = as_curve(p);
        ASSERT_TRUE(c->valid());
        const auto minus_one = RatFn::constant(c->field()->from_integer(-1));
        for (int k = 1; k <= p - 1; ++k) {
            const RatFn t = trace_by_orbit(y_of(c).pow(k));
            if (k <= p - 2) {
                EXPECT_TRUE(t.is_zero()) << "p=" << p << " k=" << k;
            } else {
                EXPECT_EQ(t, minus_one) << "p=" << p;
            }
        }
        for (int k = 0; k < 100; ++k) {
            const auto a = oracle::random_elem(c, rng, 3);
            EXPECT_EQ(trace(a), trace_by_orbit(a));
        }
    }
    for (const auto& c : {fixture::quartic(), kummer_f25()}) {
        for (int k = 0; k < 100; ++k) {
            const auto a = oracle::random_elem(c, rng, 3);
            EXPECT_EQ(trace(a), trace_by_orbit(a));
        }
    }
}

TEST(Norm, KummerGeneratorAndMultiplicativity) {
    const auto q = fixture::quartic();
    EXPECT_EQ(norm(y_of(q)), -RatFn(q->f()));
    const auto as = fixture::as_f3();
    // N(y) = prod (y + j) = y^3 - y = r.
    EXPECT_EQ(norm(y_of(as)), as->r());
    std::mt19937_64 rng(5);
    for (const auto& c : {q, as}) {
        for (int k = 0; k < 20; ++k) {
            const auto a = oracle::random_elem(c, rng, 2);
            const auto b = oracle::random_elem(c, rng, 2);
            EXPECT_EQ(norm(a * b), norm(a) * norm(b));
        }
    }
}

TEST(ExteriorD, Examples) {
    const auto q = fixture::quartic();
    const auto f = q->field();
    const auto w = exterior_d(FFElem::monomial(q, R(f, {0}, {0, 1}) + R(f, {1}, {0, 1}), 1));
    EXPECT_TRUE(w.coeff().coeff(0).is_zero());
    EXPECT_EQ(w.coeff().coeff(1), R(f, {1, 0, 0, 0, 1}, {0, 0, 4, 0, 0, 0, 1}));

    const auto as = fixture::as_f3();
    const auto fa = as->field();
    const auto dy = exterior_d(y_of(as));
    EXPECT_EQ(dy, FFDiff(FFElem::constant(as, -as->r().derivative())));
    // psi = f * sum l_i prod_{j != i} (x - rho_j) - f' prod (x - rho_j).
    Poly sum(fa);
    for (std::size_t i = 0; i < as->branch().size(); ++i) {
        Poly term = Poly::constant(fa, as->branch()[i].mult);
        for (std::size_t j = 0; j < as->branch().size(); ++j) {
            if (j != i) term *= Poly::linear(as->branch()[j].rho);
        }
        sum += term;
    }
    const Poly psi = as->f() * sum - as->f().derivative() * as->branch_product();
    Poly den = Poly::constant(fa, 1);
    for (const auto& b : as->branch()) den *= Poly::linear(b.rho).pow(b.mult + 1);
    EXPECT_EQ(dy.coeff().coeff(0), RatFn(psi, den));

    EXPECT_TRUE(exterior_d(FFElem::constant(q, R(f, {3}))).is_zero());
}

TEST(ExteriorD, DefiningEquationIdentities) {
    const auto q = fixture::quartic();
    const auto y = y_of(q);
    const auto n = RatFn::constant(q->field()->from_integer(q->degree()));
    const FFDiff lhs = (n * y.pow(q->degree() - 1)) * exterior_d(y);
    EXPECT_EQ(lhs, FFDiff(FFElem::constant(q, RatFn(q->f().derivative()))));

    const auto k = kummer_f25();
    const auto yk = y_of(k);
    EXPECT_EQ((RatFn::constant(k->field()->from_integer(3)) * yk.pow(2)) * exterior_d(yk),
              FFDiff(FFElem::constant(k, RatFn(k->f().derivative()))));

    for (int p : {3, 5, 7}) {
        const auto c = as_curve(p);
        const auto ya = y_of(c);
        const FFDiff res = (RatFn::constant(c->field()->from_integer(p)) * ya.pow(p - 1) -
                            FFElem::constant(c, RatFn::constant(c->field()->one()))) *
                               exterior_d(ya) -
                           FFDiff(FFElem::constant(c, c->r().derivative()));
        EXPECT_TRUE(res.is_zero());
    }
}

TEST(ExteriorD, LeibnizAndFrobenius) {
    std::mt19937_64 rng(6);
    for (const auto& c : {fixture::quartic(), fixture::as_f3(), kummer_f25(), as_curve(5)}) {
        for (int k = 0; k < 25; ++k) {
            const auto a = oracle::random_elem(c, rng, 3);
            const auto b = oracle::random_elem(c, rng, 3);
            EXPECT_EQ(exterior_d(a * b), a * exterior_d(b) + b * exterior_d(a));
            EXPECT_EQ(exterior_d(a + b), exterior_d(a) + exterior_d(b));
        }
    }
    for (int p : {3, 5}) {
        const auto c = as_curve(p);
        for (int k = 0; k < 10; ++k) {
            const auto a = oracle::random_elem(c, rng, 2);
            EXPECT_TRUE(exterior_d(a.pow(p)).is_zero());
        }
    }
}

TEST(Places, QuarticClasses) {
    const auto pcs = place_classes(*fixture::quartic());
    ASSERT_EQ(pcs.size(), 6u);
    EXPECT_EQ(pcs[0].label(), "P[0]");
    const auto& inf = place(pcs, PlaceKind::over_infinity);
    EXPECT_EQ(inf.label(), "Pinf");
    EXPECT_EQ(inf.points, 2);
    EXPECT_EQ(inf.v_x, -1);
    EXPECT_EQ(inf.v_y, -2);
    EXPECT_EQ(inf.v_dx, -2);
    const auto& zero = place(pcs, PlaceKind::over_zero);
    EXPECT_EQ(zero.label(), "P0");
    EXPECT_EQ(zero.v_x, 1);
    EXPECT_EQ(zero.points, 2);
    const auto& b = place(pcs, PlaceKind::branch, 0);
    EXPECT_EQ(b.e, 2);
    EXPECT_EQ(b.v_y, 1);
    EXPECT_EQ(b.v_dx, 1);

    const auto as = place_classes(*fixture::as_f3());
    const auto& ab = place(as, PlaceKind::branch, 1);
    EXPECT_EQ(ab.e, 3);
    EXPECT_EQ(ab.v_y, -1);
    EXPECT_EQ(ab.v_dx, 4);
    EXPECT_EQ(place(as, PlaceKind::over_infinity).v_y, 0);
}

TEST(Valuation, Examples) {
    const auto q = fixture::quartic();
    const auto pcs = place_classes(*q);
    auto vb = valuation_bound(y_of(q), place(pcs, PlaceKind::branch, 0));
    EXPECT_EQ(vb.bound, 1);
    EXPECT_TRUE(vb.exact);
    vb = valuation_bound(y_of(q), place(pcs, PlaceKind::over_infinity));
    EXPECT_EQ(vb.bound, -2);
    EXPECT_FALSE(vb.exact);
    EXPECT_TRUE(vb.unique_minimum);

    const auto as = fixture::as_f3();
    const auto apc = place_classes(*as);
    const FFDiff w(FFElem::constant(as, RatFn(Poly::constant(as->field(), 1), as->branch_product())));
    vb = valuation_bound(w, place(apc, PlaceKind::branch, 0));
    EXPECT_EQ(vb.bound, 1);
    EXPECT_TRUE(vb.exact);
    EXPECT_THROW(valuation_bound(FFElem(q), pcs[0]), std::domain_error);
}

TEST(Valuation, CancellationIsNotExact) {
    // x^2 + y over infinity on the quartic: both terms have valuation -2.
    const auto q = fixture::quartic();
    const auto pcs = place_classes(*q);
    const auto& inf = place(pcs, PlaceKind::over_infinity);
    const FFElem a(q, {RatFn(Poly::monomial(q->field()->one(), 2)), RatFn::constant(q->field()->one())});
    const auto vb = valuation_bound(a, inf);
    EXPECT_EQ(vb.bound, -2);
    EXPECT_FALSE(vb.unique_minimum);
    EXPECT_FALSE(vb.exact);
    // The true valuation is 0: (x^2 + y)(x^2 - y) = x^4 - f = -4.
    EXPECT_EQ(norm(a), RatFn::constant(q->field()->from_integer(-4)));
}

// Monomials x^a (x - rho)^b y^k h at branch classes: the bound equals the
// closed-form valuation a v(x) + e b + k lambda.
TEST(Valuation, MonomialsMatchClosedForm) {
    std::mt19937_64 rng(8);
    for (const auto& c : {fixture::quartic(), kummer_f25(), fixture::kummer(13, 4, {{1, 1}, {2, 3}, {5, 2}, {7, 2}})}) {
        ASSERT_TRUE(c->valid());
        const auto rd = ram_data(*c);
        const auto pcs = place_classes(*c);
        for (std::size_t i = 0; i < c->branch().size(); ++i) {
            const auto& pc = place(pcs, PlaceKind::branch, i);
            for (int k = 0; k < c->degree(); ++k) {
                for (int b = -2; b <= 2; ++b) {
                    const Poly lin = Poly::linear(c->branch()[i].rho).pow(std::abs(b));
                    const RatFn base = b >= 0 ? RatFn(lin) : RatFn(Poly::constant(c->field(), 1), lin);
                    const RatFn coeff = RatFn(Poly::x(c->field())) * base;
                    const auto vb = valuation_bound(FFElem::monomial(c, coeff, k), pc);
                    const int vx = c->branch()[i].rho.is_zero() ? rd.branch[i].e : 0;
                    EXPECT_EQ(vb.bound, vx + rd.branch[i].e * b + k * rd.branch[i].lambda);
                    EXPECT_TRUE(vb.exact);
                }
            }
        }
    }
}

TEST(Pairing, Examples) {
    const auto q = fixture::quartic();
    const auto fq = q->field();
    const FFDiff dx_over_y(FFElem::monomial(q, RatFn(Poly::constant(fq, 1), q->f()), 1));
    EXPECT_TRUE(pairing(FFElem::monomial(q, R(fq, {1}, {0, 1}), 1), dx_over_y).is_one());
    EXPECT_TRUE(pairing(FFElem::constant(q, R(fq, {1})), dx_over_y).is_zero());

    const auto as = fixture::as_f3();
    const auto fa = as->field();
    const auto h = FFElem::monomial(as, RatFn(as->branch_product(), Poly::x(fa)), 1);
    const FFDiff w(FFElem::monomial(as, RatFn(Poly::constant(fa, 1), as->branch_product()), 1));
    EXPECT_TRUE(pairing(h, w).is_one());
}

TEST(Pairing, ResidueOracle) {
    std::mt19937_64 rng(9);
    const auto q = fixture::quartic();
    for (int k = 0; k < 50; ++k) {
        const auto a = oracle::random_elem(q, rng, 3);
        const auto b = oracle::random_elem(q, rng, 3);
        const RatFn t = trace(a * b);
        const auto res = oracle::residue_at_infinity(*q->field(), oracle::coeffs(t.num()), oracle::coeffs(t.den()));
        const auto c = q->field()->from_integer(-2).inverse();
        EXPECT_EQ(pairing(a, FFDiff(b)), c * q->field()->element(res));
    }
}

}  // namespace
