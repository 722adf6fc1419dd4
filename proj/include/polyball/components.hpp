#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyball/lp.hpp"
#include "polyball/ratlin.hpp"

namespace polyball {

/**
 * A set of m linearly independent vectors in the coordinate space of
 * l_inf^n, stored as the rows of an m x n matrix. Construction validates
 * linear independence (rank = m) and m <= n.
 */
class Basis {
  public:
    explicit Basis(RatMat rows);

    int m() const { return static_cast<int>(rows_.rows()); }
    int n() const { return static_cast<int>(rows_.cols()); }
    const RatMat& matrix() const { return rows_; }
    RatVec column(int i) const { return rows_.column(static_cast<std::size_t>(i)); }

  private:
    RatMat rows_;
};

/**
 * The components of a basis: one vector per ambient coordinate, the i-th
 * being the column (a_i^1, ..., a_i^m). A ComponentSet can also be built
 * directly from user-supplied vectors; that is how finite closure models of
 * sequence-space inputs enter the library (limits are never computed here).
 */
struct ComponentSet {
    int m = 0;
    std::vector<RatVec> components;

    static ComponentSet from_vectors(std::vector<RatVec> vectors);
};

ComponentSet components_of(const Basis& basis);

/// Components identified up to global sign. The representative is the
/// lexicographically larger of {c, -c}; member_signs[i] maps it back to the
/// original column. Zero columns are collected into a single zero class.
struct EquivClass {
    RatVec representative;
    std::vector<int> members;       // 0-based coordinates, ascending
    std::vector<int> member_signs;  // +1 / -1, parallel to members
    bool is_zero = false;
};

/// Classes in canonical order: lexicographic by representative, the zero
/// class (if any) last. Together the member sets partition the coordinates.
std::vector<EquivClass> equivalence_classes(const ComponentSet& cs);

enum class StarVerdict { Strict, WeakOnly, None, Zero };

std::string verdict_name(StarVerdict v);

/**
 * Per-class domination verdicts with their LP certificates. strict_count is
 * the number r of classes with a positive-margin certificate; weak_count is
 * |P|, the number of classes admitting at least a margin-0 certificate.
 */
struct StarReport {
    int m = 0;
    int num_components = 0;
    std::vector<EquivClass> classes;
    std::vector<StarVerdict> verdicts;
    std::vector<std::optional<StarCertificate>> certificates;
    int strict_count = 0;  // r
    int weak_count = 0;    // |P|

    std::vector<int> strict_indices() const;
    std::vector<int> weak_indices() const;       // strict + weak-only
    std::vector<int> weak_only_indices() const;  // classes where the two verdicts differ
    std::vector<RatVec> strict_representatives() const;
    std::vector<RatVec> weak_representatives() const;
};

/**
 * Classifies every class by the margin LP: margin > 0 is Strict, margin = 0
 * is WeakOnly, an infeasible normalization is None. Competitors are the
 * representatives of all other nonzero classes (the equivalent set of the
 * target is excluded; sign flips are absorbed by |.|).
 */
StarReport star_satisfiers(const ComponentSet& cs);

/// Weak verdicts only, decided by a feasibility LP per class. Serves as an
/// independent route to the weak set; strict_count is not populated.
StarReport weak_star_satisfiers(const ComponentSet& cs);

}  // namespace polyball
