#pragma once

#include <cstddef>
#include <vector>

#include "polyball/components.hpp"
#include "polyball/lp.hpp"
#include "polyball/ratlin.hpp"

namespace polyball {

/**
 * H-representation of the unit ball of span{a_1..a_m} in coefficient
 * coordinates: { beta : |<beta, c>| <= 1 for every component c }, one +-
 * constraint pair per nonzero equivalence class. Zero classes are dropped
 * (they contribute no constraint). The class representatives must span the
 * coefficient space, which makes the ball bounded and 0 an interior point.
 */
struct BallPolytope {
    int m = 0;
    int num_coordinates = 0;            // ambient coordinate count of the source
    std::vector<EquivClass> classes;    // nonzero classes, canonical order
    std::vector<LinConstraint> constraints;  // 2k = +rep_k, 2k+1 = -rep_k

    int class_of_constraint(std::size_t ci) const { return static_cast<int>(ci / 2); }
};

BallPolytope unit_ball_hrep(const Basis& basis);
BallPolytope unit_ball_hrep(const ComponentSet& cs);

/// max_i |<beta, c_i>|, the norm of sum beta_k a_k in the subspace.
Rational coefficient_norm(const BallPolytope& p, const RatVec& beta);

/**
 * The minimal face of a unit-sphere point, as its tight data: the
 * coordinates where |<beta, c_i>| = 1 with the sign of the value, the tight
 * classes, and dim_estimate = m - rank(tight representatives) (0 exactly for
 * vertices).
 */
struct FaceDescriptor {
    std::vector<int> tight_coords;   // 0-based, ascending
    std::vector<int> tight_signs;    // value of <beta, c_i>, parallel to tight_coords
    std::vector<int> tight_classes;  // ascending class indices into BallPolytope::classes
    int dim_estimate = 0;
};

/// Exact vertex set with full tight data, in canonical lexicographic order
/// (closed under negation). threads = 0 picks the default worker count
/// (POLYBALL_THREADS env var, else all cores); the result does not depend
/// on the schedule.
struct VertexList {
    std::vector<RatVec> vertices;
    std::vector<FaceDescriptor> faces;  // parallel to vertices

    std::size_t size() const { return vertices.size(); }
};

VertexList enumerate_vertices(const BallPolytope& p, int threads = 0);

/// Per-class facet verdicts from the LP redundancy route. A class yields a
/// facet pair iff its constraint is irredundant among all the others.
struct FacetClassEntry {
    int class_index = 0;
    bool facet = false;
    Rational relaxed_value;
    RatVec witness;
};

struct FacetReport {
    std::vector<FacetClassEntry> entries;
    int facet_count = 0;  // 2 x number of facet classes
};

FacetReport facet_classes(const BallPolytope& p);

/// Tight data of a point with coefficient norm exactly 1.
/// Throws ValidationError for interior (norm < 1) or exterior (norm > 1) points.
FaceDescriptor minimal_face(const BallPolytope& p, const RatVec& beta);

/// True iff the tight components at beta span the coefficient space
/// (the minimal face is the single point).
bool is_extreme(const BallPolytope& p, const RatVec& beta);

/**
 * Independent maximality test by LP extension search: beta fails iff some
 * alpha agrees with beta on its tight set while driving one additional
 * class to value +-1 within the ball. Agrees with is_extreme on every input.
 */
bool is_maximal_star_constant(const BallPolytope& p, const RatVec& beta);

/// Number of threads to use: POLYBALL_THREADS when set (>= 1), else all cores.
int default_thread_count();

}  // namespace polyball
