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

#include "cyclo_cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "cyclo_cli/spec_file.hpp"

namespace cyclo::cli {

namespace {

/// Non-increasing sequences of parts from `allowed` summing to `total` with
/// at most `max_parts` parts.
void partitions(int total, int max_part, std::size_t max_parts, const std::vector<int>& allowed,
                std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        if (!current.empty()) out.push_back(current);
        return;
    }
    if (current.size() == max_parts) return;
    for (int part = std::min(max_part, total); part >= 1; --part) {
        if (std::find(allowed.begin(), allowed.end(), part) == allowed.end()) continue;
        current.push_back(part);
        partitions(total - part, part, max_parts, allowed, current, out);
        current.pop_back();
    }
}

Json element_json(const gf::Field& field, gf::Code c) {
    if (field.is_prime_field()) return Json(c);
    Json out = Json::array();
    for (auto v : field.coordinates(c)) out.push_back(v);
    return out;
}

std::mt19937_64 curve_rng(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

/// r distinct codes of F_q in a seeded random order.
std::vector<gf::Code> pick_points(std::mt19937_64& rng, std::uint64_t q, std::size_t r) {
    std::vector<gf::Code> codes(q);
    std::iota(codes.begin(), codes.end(), gf::Code{0});
    for (std::size_t k = 0; k < r; ++k) {
        std::uniform_int_distribution<std::size_t> pick(k, codes.size() - 1);
        std::swap(codes[k], codes[pick(rng)]);
    }
    codes.resize(r);
    return codes;
}

std::vector<Json> kummer_specs(const SweepParams& params) {
    std::vector<Json> out;
    for (int p = 2; p <= params.p_max; ++p) {
        if (!gf::is_prime(static_cast<std::uint64_t>(p))) continue;
        for (int n = 2; n <= params.n_max; ++n) {
            if (n % p == 0) continue;
            std::vector<std::int64_t> modulus;
            if ((p - 1) % n != 0) {
                if ((p * p - 1) % n != 0) continue;
                modulus = gf::smallest_irreducible(static_cast<std::uint64_t>(p), 2);
            }
            const auto field = gf::Field::make(p, modulus);
            const std::uint64_t q = field->order();
            std::vector<int> allowed(static_cast<std::size_t>(params.l_max));
            std::iota(allowed.begin(), allowed.end(), 1);
            for (int total = n; total <= params.l_max; total += n) {
                std::vector<std::vector<int>> parts;
                std::vector<int> current;
                partitions(total, total, static_cast<std::size_t>(q), allowed, current, parts);
                for (const auto& mults : parts) {
                    int common = n;
                    for (int l : mults) common = std::gcd(common, l);
                    if (common != 1) continue;
                    Json spec;
                    spec["type"] = "kummer";
                    spec["p"] = p;
                    if (!modulus.empty()) spec["ext_modulus"] = modulus;
                    spec["n"] = n;
                    auto rng = curve_rng(params.seed, out.size());
                    const auto points = pick_points(rng, q, mults.size());
                    Json branch = Json::array();
                    for (std::size_t i = 0; i < mults.size(); ++i) {
                        branch.push_back(Json{{"rho", element_json(*field, points[i])}, {"l", mults[i]}});
                    }
                    spec["branch"] = branch;
                    out.push_back(std::move(spec));
                }
            }
        }
    }
    return out;
}

std::vector<Json> as_specs(const SweepParams& params) {
    std::vector<Json> out;
    for (int p = 3; p <= params.p_max; ++p) {
        if (!gf::is_prime(static_cast<std::uint64_t>(p))) continue;
        const auto field = gf::Field::make(p);
        std::vector<int> allowed;
        for (int l = 1; l <= params.li_max; ++l) {
            if (l % p != 0) allowed.push_back(l);
        }
        const std::size_t max_r = std::min<std::size_t>(static_cast<std::size_t>(params.r_max), static_cast<std::size_t>(p));
        std::vector<std::vector<int>> patterns;
        for (std::size_t r = 1; r <= max_r; ++r) {
            for (int total = 1; total <= static_cast<int>(r) * params.li_max; ++total) {
                std::vector<std::vector<int>> parts;
                std::vector<int> current;
                partitions(total, params.li_max, r, allowed, current, parts);
                for (auto& m : parts) {
                    if (m.size() == r) patterns.push_back(std::move(m));
                }
            }
        }
        for (const auto& mults : patterns) {
            auto rng = curve_rng(params.seed, out.size());
            const auto points = pick_points(rng, field->order(), mults.size());
            const int l = std::accumulate(mults.begin(), mults.end(), 0);
            std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
            std::uniform_int_distribution<std::int64_t> nonzero(1, p - 1);
            // Numerator of degree l, nonzero at 0 and at every branch point.
            std::vector<std::int64_t> f;
            for (int attempt = 0;; ++attempt) {
                f.assign(static_cast<std::size_t>(l) + 1, 0);
                for (auto& c : f) c = coeff(rng);
                f.front() = nonzero(rng);
                f.back() = nonzero(rng);
                const Poly poly = Poly::from_ints(field, std::span<const std::int64_t>(f));
                bool ok = true;
                for (auto c : points) ok = ok && !poly.evaluate(field->element(c)).is_zero();
                if (ok) break;
            }
            Json spec;
            spec["type"] = "artin-schreier";
            spec["p"] = p;
            Json branch = Json::array();
            for (std::size_t i = 0; i < mults.size(); ++i) {
                branch.push_back(Json{{"rho", points[i]}, {"l", mults[i]}});
            }
            spec["branch"] = branch;
            spec["f"] = f;
            out.push_back(std::move(spec));
        }
    }
    return out;
}

struct Outcome {
    bool pass = false;
    int genus = 0;
    std::size_t checks = 0;
    std::map<std::string, int> status_counts;
    std::vector<std::string> failing;
};

Outcome verify_one(const Json& spec_doc, const VerifyOptions& options) {
    Outcome o;
    try {
        const CurveSpec spec = decode_curve_spec(spec_doc);
        auto report = full_report(spec.curve, options);
        report.checks.push_back(sign_adjudication(spec.curve, options.policy));
        o.genus = genus_rh(*spec.curve);
        o.pass = true;
        for (const auto& c : report.checks) {
            ++o.checks;
            ++o.status_counts[to_string(c.status)];
            if (!c.passed()) {
                o.pass = false;
                o.failing.push_back(c.name);
            }
        }
    } catch (const std::exception& e) {
        o.pass = false;
        o.failing.push_back(std::string("error: ") + e.what());
    }
    return o;
}

}  // namespace

std::vector<Json> enumerate_specs(const SweepParams& params) {
    std::vector<Json> all = params.family == Family::kummer ? kummer_specs(params) : as_specs(params);
    if (params.count_cap <= 0 || all.size() <= static_cast<std::size_t>(params.count_cap)) return all;
    std::vector<Json> out;
    const std::size_t cap = static_cast<std::size_t>(params.count_cap);
    for (std::size_t k = 0; k < cap; ++k) out.push_back(all[k * all.size() / cap]);
    return out;
}

SweepResult run_sweep(const SweepParams& params) {
    const auto specs = enumerate_specs(params);
    std::vector<Outcome> outcomes(specs.size());
    const int jobs = std::max(1, params.jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < specs.size(); ++k) outcomes[k] = verify_one(specs[k], params.options);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < specs.size(); k = next++) {
                    outcomes[k] = verify_one(specs[k], params.options);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    SweepResult res;
    Json& s = res.summary;
    s["family"] = params.family == Family::kummer ? "kummer" : "artin-schreier";
    Json pj;
    pj["p_max"] = params.p_max;
    if (params.family == Family::kummer) {
        pj["n_max"] = params.n_max;
        pj["l_max"] = params.l_max;
    } else {
        pj["r_max"] = params.r_max;
        pj["li_max"] = params.li_max;
    }
    pj["count_cap"] = params.count_cap;
    pj["seed"] = params.seed;
    s["params"] = pj;
    s["policy"] = Json{{"mu_range", to_string(params.options.policy)},
                       {"sign_convention", to_string(params.options.sign)}};

    std::size_t passed = 0;
    std::size_t checks = 0;
    int genus_max = 0;
    std::map<std::string, int> status_counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
    std::map<std::string, int> failing_counts;
    Json failures = Json::array();
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const auto& o = outcomes[k];
        checks += o.checks;
        genus_max = std::max(genus_max, o.genus);
        for (const auto& [status, count] : o.status_counts) status_counts[status] += count;
        if (o.pass) {
            ++passed;
            continue;
        }
        for (const auto& name : o.failing) {
            // cocycle:a[1,2] and friends aggregate under their family name.
            ++failing_counts[name.substr(0, name.find(':'))];
        }
        failures.push_back(Json{{"index", k}, {"spec", specs[k]}, {"failing_checks", o.failing}});
    }
    s["curves"] = specs.size();
    s["passed"] = passed;
    s["failed"] = specs.size() - passed;
    s["checks_run"] = checks;
    s["genus_max"] = genus_max;
    Json sc;
    for (const auto& [k, v] : status_counts) sc[k] = v;
    s["status_counts"] = sc;
    Json fc = Json::object();
    for (const auto& [k, v] : failing_counts) fc[k] = v;
    s["failing_check_counts"] = fc;
    s["failures"] = failures;
    res.all_pass = passed == specs.size();
    s["all_pass"] = res.all_pass;
    return res;
}

}  // namespace cyclo::cli
