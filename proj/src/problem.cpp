#include "polyball/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace polyball {

using nlohmann::json;

namespace {

Rational parse_rational_json(const json& j, const std::string& where) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_number_float())
        throw ValidationError(where + ": floating-point numbers are not accepted; rationals must be exact \"p/q\" strings or integers");
    throw ValidationError(where + ": expected a rational as \"p/q\" string or integer");
}

RatVec parse_ratvec_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ValidationError(where + ": expected a non-empty array of rationals");
    RatVec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(parse_rational_json(x, where));
    return v;
}

std::vector<RatVec> parse_matrix_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ValidationError(where + ": expected a non-empty array of rows");
    std::vector<RatVec> rows;
    rows.reserve(j.size());
    for (const auto& r : j) rows.push_back(parse_ratvec_json(r, where));
    return rows;
}

json ratvec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

}  // namespace

ProblemFile parse_problem_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(origin + ": not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw ValidationError(origin + ": top level must be a JSON object");

    static const std::vector<std::string> known = {"version",        "basis", "component_set", "extreme_points",
                                                   "n",              "query_beta", "s",        "source"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ValidationError(origin + ": unknown key \"" + key + "\"");
    }

    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
        throw ValidationError(origin + ": missing or unsupported schema version (expected \"version\": 1)");

    const int present = int(j.contains("basis")) + int(j.contains("component_set")) + int(j.contains("extreme_points"));
    if (present != 1)
        throw ValidationError(origin + ": exactly one of basis / component_set / extreme_points is required");

    ProblemFile p;
    if (j.contains("basis")) {
        p.kind = ProblemKind::Basis;
        p.basis = Basis(RatMat::from_rows(parse_matrix_json(j["basis"], origin + ": basis")));
    } else if (j.contains("component_set")) {
        p.kind = ProblemKind::Components;
        p.component_set = ComponentSet::from_vectors(parse_matrix_json(j["component_set"], origin + ": component_set"));
    } else {
        p.kind = ProblemKind::OperatorSpace;
        p.extreme_points = ExtremeSet::create(parse_matrix_json(j["extreme_points"], origin + ": extreme_points"));
        if (!j.contains("n"))
            throw ValidationError(origin + ": extreme_points inputs require \"n\" (number of l_inf copies)");
    }

    if (j.contains("n")) {
        if (p.kind != ProblemKind::OperatorSpace)
            throw ValidationError(origin + ": \"n\" is only meaningful with extreme_points");
        if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
            throw ValidationError(origin + ": \"n\" must be an integer >= 1");
        p.n = j["n"].get<long long>();
    }
    if (j.contains("query_beta")) p.query_beta = parse_ratvec_json(j["query_beta"], origin + ": query_beta");
    if (j.contains("s")) {
        if (!j["s"].is_number_integer() || j["s"].get<long long>() < 1)
            throw ValidationError(origin + ": \"s\" must be an integer >= 1");
        p.s = static_cast<int>(j["s"].get<long long>());
    }
    if (j.contains("source")) {
        if (!j["source"].is_string()) throw ValidationError(origin + ": \"source\" must be a string");
        p.source = j["source"].get<std::string>();
    }
    return p;
}

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str(), path);
}

ComponentSet ProblemFile::subspace_components() const {
    switch (kind) {
        case ProblemKind::Basis: return components_of(*basis);
        case ProblemKind::Components: return *component_set;
        case ProblemKind::OperatorSpace: return components_of(operator_space_basis(*extreme_points));
    }
    throw InternalInconsistencyError("problem: unknown kind");
}

json problem_echo(const ProblemFile& p) {
    json j;
    j["version"] = 1;
    switch (p.kind) {
        case ProblemKind::Basis: {
            json rows = json::array();
            for (std::size_t i = 0; i < static_cast<std::size_t>(p.basis->m()); ++i)
                rows.push_back(ratvec_to_json(p.basis->matrix().row(i)));
            j["basis"] = rows;
            break;
        }
        case ProblemKind::Components: {
            json rows = json::array();
            for (const auto& c : p.component_set->components) rows.push_back(ratvec_to_json(c));
            j["component_set"] = rows;
            break;
        }
        case ProblemKind::OperatorSpace: {
            json rows = json::array();
            for (const auto& v : p.extreme_points->points) rows.push_back(ratvec_to_json(v));
            j["extreme_points"] = rows;
            j["n"] = p.n;
            break;
        }
    }
    if (p.query_beta) j["query_beta"] = ratvec_to_json(*p.query_beta);
    if (p.s) j["s"] = *p.s;
    if (!p.source.empty()) j["source"] = p.source;
    return j;
}

RatVec parse_beta_flag(const std::string& text) {
    RatVec v;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            v.push_back(Rational::parse(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    if (v.empty()) throw ValidationError("--beta: expected a comma- or space-separated list of rationals");
    return v;
}

}  // namespace polyball
