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

#ifndef CYCLO_COHOMOLOGY_HPP
#define CYCLO_COHOMOLOGY_HPP

#include <string>
#include <vector>

#include "cyclo/curve.hpp"
#include "cyclo/funcfield.hpp"

namespace cyclo {

/// Sign of the omega_infinity slot of the a-family. `paper` keeps the
/// unflipped slot, for which d f = w0 + w_inf; `negated_infty` flips the
/// slot so that d f = w0 - w_inf.
enum class SignConvention { paper, negated_infty };

std::string to_string(SignConvention sign);

struct BasisIndex {
    int mu = 0;
    int nu = 0;
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

struct OmegaElement {
    BasisIndex index;
    FFDiff omega;
    std::string label() const;
};

struct H1Element {
    BasisIndex index;
    FFElem h;
    std::string label() const;
};

enum class TripleKind { a, delta };

struct DeRhamTriple {
    TripleKind kind = TripleKind::a;
    BasisIndex index;
    FFDiff omega0;
    FFDiff omega_inf;
    FFElem f0inf;
    std::string label() const;
};

/// Holomorphic differentials x^{nu-1} g_mu / y^mu dx (Kummer, stored as
/// x^{nu-1} g_mu y^{n-mu} / f dx) or x^{nu-1} y^mu / g_mu dx (Artin-Schreier).
std::vector<OmegaElement> omega_basis(const CurvePtr& curve, RangePolicy policy);

/// Cech representatives y^mu / (x^nu g_mu) (Kummer) or
/// g_{p-mu} y^{mu-1} / x^nu (Artin-Schreier; `extended` adds mu = p).
std::vector<H1Element> h1_basis(const CurvePtr& curve, RangePolicy policy);

/// Index on the other side of the duality: Kummer (mu, nu) itself,
/// Artin-Schreier (p - mu, nu).
BasisIndex dual_index(const Curve& curve, BasisIndex omega_index);

struct KummerAux {
    std::vector<std::size_t> support;
    Poly psi;
    Poly phi_mu;
    /// f / prod_{i in support} (x - rho_i), computed without g_mu.
    Poly gg_product;
};

/// Throws std::invalid_argument for non-Kummer curves or inadmissible indices.
KummerAux kummer_aux(const CurvePtr& curve, int mu, int nu);

struct AsAux {
    Poly phi;
    Poly psi;
    FFDiff omega_mu;
};

/// `mu` may be p (the extended partner). Throws std::invalid_argument for
/// non-Artin-Schreier curves or inadmissible indices.
AsAux as_aux(const CurvePtr& curve, int mu, int nu);

/// a-family (one per h1 index) followed by the delta-family (one per omega index).
std::vector<DeRhamTriple> derham_basis(const CurvePtr& curve, RangePolicy policy,
                                       SignConvention sign = SignConvention::negated_infty);

DeRhamTriple map_i(const FFDiff& omega);
FFElem map_p(const DeRhamTriple& t);

/// d f0inf - w0 + w_inf; zero exactly when the triple is a cocycle.
FFDiff cocycle_residual(const DeRhamTriple& t);

/// Pairings of f against each omega. Throws std::invalid_argument when f has
/// poles outside the fibers over 0 and infinity.
std::vector<gf::FieldElement> h1_coordinates(const std::vector<OmegaElement>& omega, const FFElem& f);
std::vector<gf::FieldElement> h1_coordinates(const CurvePtr& curve, const FFElem& f,
                                             RangePolicy policy = RangePolicy::extended);

}  // namespace cyclo

#endif  // CYCLO_COHOMOLOGY_HPP
