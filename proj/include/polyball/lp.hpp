#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyball/ratlin.hpp"

namespace polyball {

/// One linear inequality  normal · x <= bound  over free rational variables.
/// Equalities and >= constraints are encoded by negation / constraint pairs.
struct LinConstraint {
    RatVec normal;
    Rational bound;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    Rational value;  // set iff Optimal
    RatVec point;    // set iff Optimal; satisfies every constraint exactly
};

/**
 * Maximizes objective · x subject to the constraints, over free variables.
 * Exact two-phase primal simplex with Bland's anti-cycling rule; the
 * returned optimum is a basic feasible solution. An empty constraint list
 * with a nonzero objective is unbounded, not an error.
 */
LpOutcome lp_optimize(const RatVec& objective, const std::vector<LinConstraint>& constraints);

/// Phase-1 only: some point satisfying all constraints, or nullopt.
std::optional<RatVec> find_feasible(const std::vector<LinConstraint>& constraints, std::size_t nvars);

/**
 * Certificate that a component class dominates its competitors. beta is
 * normalized so that <beta, target> = 1; margin > 0 witnesses strict
 * domination (|<beta, c'>| <= 1 - margin for every competitor c'),
 * margin = 0 witnesses weak domination only.
 */
struct StarCertificate {
    RatVec beta;
    Rational margin;
    int target_class = -1;  // filled by callers that track classes
};

/**
 * Maximizes t subject to <beta, target> = 1, |<beta, c'>| <= 1 - t for all
 * competitors, t >= 0. Returns the certificate with margin = t*, or nullopt
 * when the system is infeasible (the target fails even weak domination).
 * With no competitors the margin is capped at 1 (the LP would be unbounded).
 */
std::optional<StarCertificate> strict_margin(const RatVec& target, const std::vector<RatVec>& others);

/// Feasibility of <beta, target> = 1, |<beta, c'>| <= 1. Margin is always 0.
std::optional<StarCertificate> weak_feasible(const RatVec& target, const std::vector<RatVec>& others);

struct RedundancyResult {
    bool irredundant = false;
    Rational relaxed_value;  // optimum of the system without the constraint (capped at bound + 1)
    RatVec witness;          // point attaining it
};

/**
 * Decides whether constraints[index] is irredundant by maximizing its normal
 * over all OTHER constraints: irredundant iff the relaxed optimum exceeds the
 * bound. Requires the full system to be feasible.
 */
RedundancyResult redundancy_check(std::size_t index, const std::vector<LinConstraint>& constraints);

}  // namespace polyball
