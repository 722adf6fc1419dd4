#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "polyball/components.hpp"
#include "polyball/opspace.hpp"

namespace polyball {

enum class ProblemKind { Basis, Components, OperatorSpace };

/**
 * A parsed problem file (schema version 1). Exactly one of basis /
 * component_set / extreme_points is present; rationals are strings "p/q" or
 * bare integers. component_set inputs are finite closure models supplied by
 * the user and are labeled as such in reports.
 */
struct ProblemFile {
    ProblemKind kind = ProblemKind::Basis;
    std::optional<Basis> basis;
    std::optional<ComponentSet> component_set;
    std::optional<ExtremeSet> extreme_points;
    long long n = 1;  // operator-space copies; meaningful for OperatorSpace
    std::optional<RatVec> query_beta;
    std::optional<int> s;
    std::string source;

    /// The component set of the input subspace: the basis columns, the raw
    /// set, or the columns of the operator-space basis W.
    ComponentSet subspace_components() const;

    bool is_closure_model() const { return kind == ProblemKind::Components; }
};

ProblemFile parse_problem_file(const std::string& path);
ProblemFile parse_problem_text(const std::string& text, const std::string& origin);

/// Canonical JSON echo of the parsed problem (re-serialized, sorted keys).
nlohmann::json problem_echo(const ProblemFile& p);

/// "1,-1,1" or "1 -1 1" -> RatVec.
RatVec parse_beta_flag(const std::string& text);

}  // namespace polyball
