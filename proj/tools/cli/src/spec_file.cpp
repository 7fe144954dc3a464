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

#include "cyclo_cli/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cyclo::cli {

namespace {

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
    throw InputError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

std::string type_name(const Json& v) { return v.type_name(); }

void reject_unknown(const Json& obj, const std::string& where, const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) fail_at(where, "unknown key \"" + it.key() + "\"");
    }
}

const Json& require(const Json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) fail_at(where, "missing required key \"" + key + "\"");
    return obj.at(key);
}

std::int64_t as_int(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) fail_at(where, "expected integer, found " + type_name(v));
    return v.get<std::int64_t>();
}

/// Integers in [0, p) or, for extension fields, coordinate lists of length d.
gf::FieldElement as_element(const gf::FieldPtr& field, const Json& v, const std::string& where) {
    const auto p = static_cast<std::int64_t>(field->characteristic());
    auto digit = [&](const Json& c, const std::string& at) {
        const std::int64_t d = as_int(c, at);
        if (d < 0 || d >= p) fail_at(at, "coefficient " + std::to_string(d) + " outside [0, " + std::to_string(p) + ")");
        return d;
    };
    if (v.is_number_integer()) return field->from_integer(digit(v, where));
    if (!v.is_array()) fail_at(where, "expected field element (integer or list of integers), found " + type_name(v));
    if (v.size() != static_cast<std::size_t>(field->degree())) {
        fail_at(where, "expected " + std::to_string(field->degree()) + " coordinates, found " +
                           std::to_string(v.size()));
    }
    std::vector<std::int64_t> coords;
    for (std::size_t k = 0; k < v.size(); ++k) coords.push_back(digit(v[k], where + "/" + std::to_string(k)));
    return field->from_coordinates(coords);
}

}  // namespace

CurveSpec decode_curve_spec(const Json& doc) {
    if (!doc.is_object()) fail_at("", "expected object, found " + type_name(doc));
    const Json& type_v = require(doc, "", "type");
    if (!type_v.is_string()) fail_at("/type", "expected string, found " + type_name(type_v));
    const std::string type = type_v.get<std::string>();
    const bool kummer = type == "kummer";
    if (!kummer && type != "artin-schreier") {
        fail_at("/type", "expected \"kummer\" or \"artin-schreier\", found \"" + type + "\"");
    }
    if (kummer) {
        reject_unknown(doc, "", {"type", "p", "ext_modulus", "n", "branch"});
    } else {
        reject_unknown(doc, "", {"type", "p", "ext_modulus", "branch", "f"});
    }

    CurveSpec spec;
    spec.echo = Json::object();
    spec.echo["type"] = type;
    const std::int64_t p = as_int(require(doc, "", "p"), "/p");
    spec.echo["p"] = p;

    std::vector<std::int64_t> modulus;
    if (doc.contains("ext_modulus")) {
        const Json& m = doc.at("ext_modulus");
        if (!m.is_array()) fail_at("/ext_modulus", "expected list of integers, found " + type_name(m));
        for (std::size_t k = 0; k < m.size(); ++k) modulus.push_back(as_int(m[k], "/ext_modulus/" + std::to_string(k)));
        spec.echo["ext_modulus"] = modulus;
    }
    gf::FieldPtr field;
    try {
        field = gf::Field::make(p, modulus);
    } catch (const std::invalid_argument& e) {
        fail_at(modulus.empty() ? "/p" : "/ext_modulus", e.what());
    }

    int n = 0;
    if (kummer) {
        const std::int64_t nv = as_int(require(doc, "", "n"), "/n");
        if (nv < 2 || nv > 1000000) fail_at("/n", "n = " + std::to_string(nv) + " outside [2, 1000000]");
        n = static_cast<int>(nv);
        spec.echo["n"] = n;
    }

    const Json& branch_v = require(doc, "", "branch");
    if (!branch_v.is_array()) fail_at("/branch", "expected list, found " + type_name(branch_v));
    std::vector<BranchPoint> branch;
    Json branch_echo = Json::array();
    for (std::size_t k = 0; k < branch_v.size(); ++k) {
        const std::string at = "/branch/" + std::to_string(k);
        const Json& b = branch_v[k];
        if (!b.is_object()) fail_at(at, "expected object, found " + type_name(b));
        reject_unknown(b, at, {"rho", "l"});
        const gf::FieldElement rho = as_element(field, require(b, at, "rho"), at + "/rho");
        const std::int64_t l = as_int(require(b, at, "l"), at + "/l");
        if (l < 1 || l > 100000) fail_at(at + "/l", "multiplicity " + std::to_string(l) + " outside [1, 100000]");
        branch.push_back({rho, static_cast<int>(l)});
        branch_echo.push_back(Json{{"rho", b.at("rho")}, {"l", l}});
    }
    spec.echo["branch"] = branch_echo;

    if (kummer) {
        spec.curve = Curve::kummer(field, n, std::move(branch));
    } else {
        const Json& f_v = require(doc, "", "f");
        if (!f_v.is_array()) fail_at("/f", "expected coefficient list, found " + type_name(f_v));
        std::vector<gf::Code> coeffs;
        for (std::size_t k = 0; k < f_v.size(); ++k) {
            coeffs.push_back(as_element(field, f_v[k], "/f/" + std::to_string(k)).code());
        }
        spec.echo["f"] = f_v;
        spec.curve = Curve::artin_schreier(field, Poly(field, std::move(coeffs)), std::move(branch));
    }

    if (!spec.curve->valid()) {
        std::string msg = "curve violates hypotheses:";
        for (const auto& v : spec.curve->violations()) msg += " [" + v.code + "] " + v.message + ";";
        msg.pop_back();
        throw InputError(msg);
    }
    return spec;
}

CurveSpec parse_curve_spec(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return decode_curve_spec(doc);
}

CurveSpec read_curve_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_spec(buf.str());
}

}  // namespace cyclo::cli
