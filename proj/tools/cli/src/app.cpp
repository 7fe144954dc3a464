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

#include "cyclo_cli/app.hpp"

#include <map>

#include "CLI11.hpp"
#include "cyclo_cli/report.hpp"
#include "cyclo_cli/spec_file.hpp"
#include "cyclo_cli/sweep.hpp"

namespace cyclo::cli {

namespace {

struct PolicyFlags {
    std::string mu_range = "extended";
    std::string sign = "negated-infty";

    VerifyOptions options() const {
        VerifyOptions o;
        o.policy = mu_range == "paper" ? RangePolicy::paper : RangePolicy::extended;
        o.sign = sign == "paper" ? SignConvention::paper : SignConvention::negated_infty;
        return o;
    }
};

void add_mu_range(CLI::App* cmd, PolicyFlags& flags) {
    cmd->add_option("--mu-range", flags.mu_range, "Index range for Artin-Schreier covers")
        ->check(CLI::IsMember({"paper", "extended"}))
        ->capture_default_str();
}

void add_sign(CLI::App* cmd, PolicyFlags& flags) {
    cmd->add_option("--sign", flags.sign, "Sign of the omega_infinity slot of the a-family")
        ->check(CLI::IsMember({"paper", "negated-infty"}))
        ->capture_default_str();
}

int cmd_info(const std::string& path, const PolicyFlags& flags, bool json, std::ostream& out) {
    const auto spec = read_curve_spec(path);
    const Json curve = curve_section(spec, flags.options().policy);
    if (json) {
        out << dump(Json{{"curve", curve}});
    } else {
        out << render_info(curve);
    }
    return kExitPass;
}

int cmd_basis(const std::string& path, const std::string& which, const PolicyFlags& flags, bool json,
              std::ostream& out) {
    const auto spec = read_curve_spec(path);
    const auto options = flags.options();
    Json bases = Json::object();
    if (which == "omega" || which == "all") bases["omega"] = omega_json(omega_basis(spec.curve, options.policy));
    if (which == "h1" || which == "all") bases["h1"] = h1_json(h1_basis(spec.curve, options.policy));
    if (which == "derham" || which == "all") {
        bases["derham"] = derham_json(derham_basis(spec.curve, options.policy, options.sign));
    }
    if (json) {
        out << dump(Json{{"curve", curve_section(spec, options.policy)}, {"bases", bases}, {"policy", policy_json(options)}});
    } else {
        out << render_basis(bases);
    }
    return kExitPass;
}

int cmd_verify(const std::string& path, const PolicyFlags& flags, bool json, std::ostream& out) {
    const auto spec = read_curve_spec(path);
    const auto options = flags.options();
    const auto report = full_report(spec.curve, options);
    if (json) {
        out << dump(report_document(spec, report, options));
    } else {
        out << render_checks(report.checks, report.all_pass);
    }
    return report.all_pass ? kExitPass : kExitCheckFailure;
}

int cmd_sweep(SweepParams params, bool json, std::ostream& out) {
    const auto res = run_sweep(params);
    if (json) {
        out << dump(res.summary);
    } else {
        const Json& s = res.summary;
        out << "family   " << s["family"].get<std::string>() << "\n";
        out << "curves   " << s["curves"].get<std::size_t>() << "\n";
        out << "passed   " << s["passed"].get<std::size_t>() << "\n";
        out << "failed   " << s["failed"].get<std::size_t>() << "\n";
        out << "checks   " << s["checks_run"].get<std::size_t>() << "\n";
        out << "genus    <= " << s["genus_max"].get<int>() << "\n";
        for (const auto& f : s["failures"]) {
            std::string names;
            for (const auto& n : f["failing_checks"]) names += (names.empty() ? "" : ",") + n.get<std::string>();
            out << "FAIL " << names << " " << f["spec"].dump() << "\n";
        }
    }
    return res.all_pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohomology bases of cyclic covers of the projective line", "cyclo"};
    app.require_subcommand(1);

    std::string path;
    std::string which;
    bool json = false;
    PolicyFlags flags;

    auto* info = app.add_subcommand("info", "Genus, ramification and mu-table of a curve");
    info->add_option("file", path, "Curve file (JSON)")->required();
    add_mu_range(info, flags);
    info->add_flag("--json", json, "Emit JSON");

    auto* basis = app.add_subcommand("basis", "Render a basis");
    basis->add_option("file", path, "Curve file (JSON)")->required();
    basis->add_option("which", which, "omega, h1, derham or all")
        ->check(CLI::IsMember({"omega", "h1", "derham", "all"}))
        ->required();
    add_mu_range(basis, flags);
    add_sign(basis, flags);
    basis->add_flag("--json", json, "Emit JSON");

    auto* verify = app.add_subcommand("verify", "Run every check and report");
    verify->add_option("file", path, "Curve file (JSON)")->required();
    add_mu_range(verify, flags);
    add_sign(verify, flags);
    verify->add_flag("--json", json, "Emit the full report document");

    SweepParams sp;
    std::string family = "kummer";
    auto* sweep = app.add_subcommand("sweep", "Verify every curve of a bounded corpus");
    sweep->add_option("--family", family, "Cover family")
        ->check(CLI::IsMember({"kummer", "artin-schreier"}))
        ->capture_default_str();
    auto* p_max_opt = sweep->add_option("--p-max", sp.p_max, "Largest characteristic (13 Kummer, 7 Artin-Schreier)")
                          ->check(CLI::Range(2, 31));
    sweep->add_option("--n-max", sp.n_max, "Largest Kummer degree")->check(CLI::Range(2, 12))->capture_default_str();
    sweep->add_option("--l-max", sp.l_max, "Largest Kummer total multiplicity")
        ->check(CLI::Range(2, 24))
        ->capture_default_str();
    sweep->add_option("--r-max", sp.r_max, "Most Artin-Schreier branch points")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    sweep->add_option("--li-max", sp.li_max, "Largest Artin-Schreier multiplicity")
        ->check(CLI::Range(1, 8))
        ->capture_default_str();
    sweep->add_option("--count-cap", sp.count_cap, "Evenly spaced subset of at most this many curves (0 = all)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sweep->add_option("--seed", sp.seed, "Seed for branch point and numerator choice")->capture_default_str();
    sweep->add_option("--jobs", sp.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    add_mu_range(sweep, flags);
    add_sign(sweep, flags);
    sweep->add_flag("--json", json, "Emit the summary as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (*info) return cmd_info(path, flags, json, out);
        if (*basis) return cmd_basis(path, which, flags, json, out);
        if (*verify) return cmd_verify(path, flags, json, out);
        sp.family = family == "kummer" ? Family::kummer : Family::artin_schreier;
        if (p_max_opt->count() == 0) sp.p_max = sp.family == Family::kummer ? 13 : 7;
        sp.options = flags.options();
        return cmd_sweep(sp, json, out);
    } catch (const InputError& e) {
        err << "cyclo: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "cyclo: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace cyclo::cli
