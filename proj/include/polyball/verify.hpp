#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyball/components.hpp"
#include "polyball/opspace.hpp"
#include "polyball/polytope.hpp"
#include "polyball/spaces.hpp"

namespace polyball {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int random_beta_samples = 100;
    unsigned long seed = 0x62616c6cu;
    // Caps keep desk-scale inputs at interactive runtimes; capped checks
    // still run on a deterministic subset and say so in their detail line.
    int max_extension_witnesses = 8;
    int max_classes_for_self_sum_vertices = 6;
    int max_m_for_self_sum_vertices = 3;
};

/**
 * Cross-route invariant suite for one subspace input:
 *   - facet count from LP redundancy equals 2 x strict class count,
 *   - the enumerated vertex set, the tight-rank criterion, and the
 *     LP-extension maximality search agree (vertices pass all three,
 *     non-vertex boundary witnesses fail the latter two),
 *   - |P| >= m and strict implies weak,
 *   - the weak set from the feasibility route equals the margin route,
 *   - the norm is attained on weak representatives for random beta,
 *   - every facet class has an interior witness,
 *   - self direct sum: strict count doubles, vertex count squares,
 *   - for basis inputs, the strict-class embedding is an exact isometry.
 * Every result is PASS/FAIL; a FAIL is an internal inconsistency.
 */
std::vector<CheckResult> verify_subspace(const ComponentSet& cs, const Basis* basis,
                                         const VerifyOptions& opt = {});

/// Same suite for operator-space inputs, plus extreme-set validation, the
/// dual-norm support-function oracle and the direct-sum cross-check.
std::vector<CheckResult> verify_opspace(const ExtremeSet& ext, long long n,
                                        const VerifyOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace polyball
