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

#include "cyclo_cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace cyclo::cli {

namespace {

std::string join_ints(const Json& list) {
    std::string out;
    for (const auto& v : list) {
        if (!out.empty()) out += ",";
        out += v.dump();
    }
    return out;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

Json curve_section(const CurveSpec& spec, RangePolicy policy) {
    const Curve& curve = *spec.curve;
    const auto& field = curve.field();
    Json out;
    out["input"] = spec.echo;

    Json fj;
    fj["p"] = field->characteristic();
    fj["degree"] = field->degree();
    fj["order"] = field->order();
    Json modulus = Json::array();
    for (auto c : field->modulus()) modulus.push_back(c);
    fj["modulus"] = modulus;
    out["field"] = fj;

    out["cover_degree"] = curve.degree();
    out["total_multiplicity"] = curve.total_multiplicity();
    if (curve.is_kummer()) {
        out["zeta"] = encode(curve.zeta());
        out["f"] = curve.f().render();
    } else {
        out["f"] = curve.f().render();
        out["r"] = curve.r().render();
    }
    out["genus"] = genus_rh(curve);
    out["genus_from_basis"] = genus_from_basis(curve, policy);

    const auto rd = ram_data(curve);
    Json ram = Json::array();
    for (std::size_t i = 0; i < curve.branch().size(); ++i) {
        Json row;
        row["rho"] = encode(curve.branch()[i].rho);
        row["l"] = curve.branch()[i].mult;
        row["e"] = rd.branch[i].e;
        row["g"] = rd.branch[i].g;
        if (curve.is_kummer()) row["lambda"] = rd.branch[i].lambda;
        ram.push_back(std::move(row));
    }
    out["ramification"] = ram;
    out["over_zero"] = Json{{"l0", rd.l0}, {"e0", rd.e0}, {"g0", rd.g0}};
    out["points_over_infinity"] = rd.points_over_infinity;

    Json places = Json::array();
    for (const auto& pc : place_classes(curve)) {
        places.push_back(Json{{"label", pc.label()},
                              {"e", pc.e},
                              {"points", pc.points},
                              {"v_x", pc.v_x},
                              {"v_y", pc.v_y},
                              {"v_dx", pc.v_dx}});
    }
    out["places"] = places;

    Json table = Json::array();
    const auto mt = mu_table(curve, policy);
    for (const auto& e : mt.entries()) {
        Json row;
        row["mu"] = e.mu;
        row["m"] = e.m;
        row["upsilon"] = e.upsilon;
        row["t"] = e.t;
        row["g"] = e.g.render();
        table.push_back(std::move(row));
    }
    out["mu_table"] = table;
    return out;
}

Json omega_json(const std::vector<OmegaElement>& omega) {
    Json out = Json::array();
    for (const auto& w : omega) out.push_back(Json{{"label", w.label()}, {"value", w.omega.render()}});
    return out;
}

Json h1_json(const std::vector<H1Element>& h1) {
    Json out = Json::array();
    for (const auto& h : h1) out.push_back(Json{{"label", h.label()}, {"value", h.h.render()}});
    return out;
}

Json derham_json(const std::vector<DeRhamTriple>& derham) {
    Json out = Json::array();
    for (const auto& t : derham) {
        out.push_back(Json{{"label", t.label()},
                           {"omega0", t.omega0.render()},
                           {"omega_inf", t.omega_inf.render()},
                           {"f0inf", t.f0inf.render()}});
    }
    return out;
}

Json policy_json(const VerifyOptions& options) {
    return Json{{"mu_range", to_string(options.policy)}, {"sign_convention", to_string(options.sign)}};
}

Json checks_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        out.push_back(
            Json{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}, {"data", c.payload}});
    }
    return out;
}

Json report_document(const CurveSpec& spec, const Report& report, const VerifyOptions& options) {
    Json doc;
    doc["curve"] = curve_section(spec, options.policy);
    doc["bases"] = Json{{"omega", omega_json(report.omega)},
                        {"h1", h1_json(report.h1)},
                        {"derham", derham_json(report.derham)}};
    Json matrix = Json::array();
    for (const auto& row : report.pairing_matrix) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(encode(v));
        matrix.push_back(std::move(r));
    }
    doc["pairing_matrix"] = matrix;
    doc["checks"] = checks_json(report.checks);
    doc["policy"] = policy_json(options);
    doc["all_pass"] = report.all_pass;
    return doc;
}

std::string render_info(const Json& curve) {
    std::ostringstream os;
    const Json& f = curve["field"];
    os << "cover        " << curve["input"]["type"].get<std::string>() << " of degree "
       << curve["cover_degree"].get<int>() << "\n";
    os << "field        F_" << f["order"].get<std::uint64_t>();
    if (f["degree"].get<int>() > 1) os << " (modulus " << join_ints(f["modulus"]) << ")";
    os << "\n";
    os << "f            " << curve["f"].get<std::string>() << "\n";
    if (curve.contains("r")) os << "r            " << curve["r"].get<std::string>() << "\n";
    os << "genus        " << curve["genus"].get<int>() << "\n\n";

    const bool kummer = curve["input"]["type"] == "kummer";
    os << pad("rho", 12) << pad("l", 6) << pad("e", 6) << (kummer ? pad("g", 6) + "lambda" : "g") << "\n";
    for (const auto& row : curve["ramification"]) {
        os << pad(row["rho"].dump(), 12) << pad(row["l"].dump(), 6) << pad(row["e"].dump(), 6)
           << (kummer ? pad(row["g"].dump(), 6) + row["lambda"].dump() : row["g"].dump()) << "\n";
    }
    os << "\n" << pad("mu", 6) << pad("m", 16) << pad("upsilon", 16) << pad("t", 6) << "g\n";
    for (const auto& row : curve["mu_table"]) {
        os << pad(row["mu"].dump(), 6) << pad(join_ints(row["m"]), 16) << pad(join_ints(row["upsilon"]), 16)
           << pad(row["t"].dump(), 6) << row["g"].get<std::string>() << "\n";
    }
    return os.str();
}

std::string render_basis(const Json& bases) {
    std::ostringstream os;
    for (auto it = bases.begin(); it != bases.end(); ++it) {
        for (const auto& e : it.value()) {
            if (e.contains("value")) {
                os << e["label"].get<std::string>() << " = " << e["value"].get<std::string>() << "\n";
            } else {
                os << e["label"].get<std::string>() << ":\n";
                os << "  omega0    = " << e["omega0"].get<std::string>() << "\n";
                os << "  omega_inf = " << e["omega_inf"].get<std::string>() << "\n";
                os << "  f0inf     = " << e["f0inf"].get<std::string>() << "\n";
            }
        }
    }
    return os.str();
}

std::string render_checks(const std::vector<CheckResult>& checks, bool all_pass) {
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    os << pad("check", width + 2) << pad("status", 14) << "details\n";
    for (const auto& c : checks) os << pad(c.name, width + 2) << pad(to_string(c.status), 14) << c.details << "\n";
    os << "\nall_pass: " << (all_pass ? "true" : "false") << "\n";
    return os.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cyclo::cli
