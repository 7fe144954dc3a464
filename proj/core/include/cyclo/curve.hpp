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

#ifndef CYCLO_CURVE_HPP
#define CYCLO_CURVE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/gf.hpp"
#include "cyclo/polyrat.hpp"

namespace cyclo {

enum class CoverKind { kummer, artin_schreier };

/// Index range of the Euclidean-division table. `paper` is the narrow
/// range mu in {1..p-1} for Artin-Schreier covers; `extended` adds mu = 0
/// on the differential side (and mu = p on the H^1 side). Kummer covers
/// use mu in {1..n-1} under both.
enum class RangePolicy { paper, extended };

std::string to_string(CoverKind kind);
std::string to_string(RangePolicy policy);

struct BranchPoint {
    gf::FieldElement rho;
    int mult = 1;
};

struct Violation {
    std::string code;
    std::string message;
};

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

/**
 * @brief A cyclic cover of the projective line over F_q.
 *
 * Kummer: y^n = f(x) = prod (x - rho_i)^{l_i}.
 * Artin-Schreier: y^p - y = r(x) = f(x) / prod (x - rho_i)^{l_i}.
 *
 * Construction never throws on violated hypotheses; they are collected and
 * exposed through violations(). Operations that need a valid curve call
 * require_valid().
 */
class Curve {
public:
    static CurvePtr kummer(gf::FieldPtr field, int n, std::vector<BranchPoint> branch);
    static CurvePtr artin_schreier(gf::FieldPtr field, Poly f, std::vector<BranchPoint> branch);

    CoverKind kind() const noexcept { return kind_; }
    bool is_kummer() const noexcept { return kind_ == CoverKind::kummer; }
    const gf::FieldPtr& field() const noexcept { return field_; }
    std::uint64_t characteristic() const noexcept { return field_->characteristic(); }
    /// Degree of the cover: n (Kummer) or p (Artin-Schreier).
    int degree() const noexcept { return degree_; }
    const std::vector<BranchPoint>& branch() const noexcept { return branch_; }
    /// Sum of the branch multiplicities.
    int total_multiplicity() const noexcept { return l_; }
    /// Kummer: prod (x - rho_i)^{l_i}. Artin-Schreier: the numerator of r.
    const Poly& f() const noexcept { return f_; }
    /// prod (x - rho_i)^{l_i}
    const Poly& pole_polynomial() const noexcept { return pole_poly_; }
    /// prod (x - rho_i)
    const Poly& branch_product() const noexcept { return branch_product_; }
    /// Artin-Schreier right-hand side f / prod (x - rho_i)^{l_i}.
    const RatFn& r() const noexcept { return r_; }
    /// Kummer: the canonical primitive n-th root of unity (valid curves only).
    const gf::FieldElement& zeta() const noexcept { return zeta_; }
    /// Index of the branch point at x = 0, if any.
    std::optional<std::size_t> zero_branch() const noexcept { return zero_branch_; }

    const std::vector<Violation>& violations() const noexcept { return violations_; }
    bool valid() const noexcept { return violations_.empty(); }
    /// Throws std::invalid_argument listing the violation codes.
    void require_valid() const;

private:
    struct Private {};

public:
    Curve(Private, CoverKind kind, gf::FieldPtr field, int degree, Poly f, std::vector<BranchPoint> branch);

private:
    void check_common();
    void derive();

    CoverKind kind_;
    gf::FieldPtr field_;
    int degree_;
    std::vector<BranchPoint> branch_;
    int l_ = 0;
    Poly f_;
    Poly pole_poly_;
    Poly branch_product_;
    RatFn r_;
    gf::FieldElement zeta_;
    std::optional<std::size_t> zero_branch_;
    std::vector<Violation> violations_;
};

/// Empty when every standing hypothesis holds.
std::vector<Violation> validate(const Curve& curve);

struct BranchRamification {
    int e = 1;       ///< ramification index
    int g = 1;       ///< number of points above rho_i
    int lambda = 0;  ///< Kummer only: v_P(y) at those points
};

struct RamData {
    std::vector<BranchRamification> branch;
    int l0 = 0;
    int e0 = 1;
    int g0 = 1;
    int points_over_infinity = 0;
};

RamData ram_data(const Curve& curve);

struct MuEntry {
    int mu = 0;
    std::vector<int> m;
    std::vector<int> upsilon;
    Poly g;
    int t = 0;
    /// Kummer only: branch indices with upsilon_i != 0.
    std::vector<std::size_t> support;
};

class MuTable {
public:
    MuTable(RangePolicy policy, std::vector<MuEntry> entries)
        : policy_(policy), entries_(std::move(entries)) {}

    RangePolicy policy() const noexcept { return policy_; }
    const std::vector<MuEntry>& entries() const& noexcept { return entries_; }
    /// By value on temporaries, so `for (auto& e : mu_table(...).entries())` is safe.
    std::vector<MuEntry> entries() && { return std::move(entries_); }
    const MuEntry* find(int mu) const noexcept;
    /// Throws std::out_of_range when mu is outside the table.
    const MuEntry& at(int mu) const&;
    MuEntry at(int mu) && { return at(mu); }

private:
    RangePolicy policy_;
    std::vector<MuEntry> entries_;
};

/// Euclidean data per mu. Kummer: mu*lambda_i = m_i e_i + upsilon_i over
/// mu in {1..n-1}. Artin-Schreier: (p-1-mu) l_i + (p-1) = m_i p + upsilon_i
/// over {1..p-1} (paper) or {0..p-1} (extended).
MuTable mu_table(const Curve& curve, RangePolicy policy);

/// Genus from the degree of the canonical divisor.
int genus_rh(const Curve& curve);

/// Sum of max(t^(mu) - 1, 0) over the active mu range.
int genus_from_basis(const Curve& curve, RangePolicy policy);

}  // namespace cyclo

#endif  // CYCLO_CURVE_HPP
