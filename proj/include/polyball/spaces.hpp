#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "polyball/components.hpp"
#include "polyball/polytope.hpp"

namespace polyball {

/**
 * The norm-preserving projection of a subspace onto the coordinates of its
 * strict classes: row k of the image basis is (c_1[k], ..., c_r[k]) over the
 * strict representatives c_j. Dropping non-strict classes is sound because
 * their constraints are redundant for the coefficient-space ball; the
 * construction re-verifies the isometry at every source vertex and on a
 * fixed batch of random coefficient vectors.
 */
struct EmbeddingMap {
    int m = 0;
    int source_n = 0;
    int r = 0;                       // strict class count = image ambient dimension
    std::vector<RatVec> strict_reps;  // canonical order
    std::vector<RatVec> image_rows;   // m rows of length r, a basis of the image
};

EmbeddingMap embed_into_linf(const Basis& basis);

/// Same construction for a raw component set (the finite closure model of a
/// sequence-space input); the source norm is determined by the set itself.
EmbeddingMap embed_into_linf(const ComponentSet& cs);

/// W embeds isometrically into l_inf^s iff r <= s.
bool decide_embeddability(const Basis& basis, int s);
bool decide_embeddability(const ComponentSet& cs, int s);

/// W is isometrically isomorphic to l_inf^m iff r = m.
bool decide_isometric_to_linfm(const Basis& basis);
bool decide_isometric_to_linfm(const ComponentSet& cs);

/// Summary verdict for one subspace.
struct SpaceVerdict {
    int m = 0;
    int n = 0;
    int strict_count = 0;  // r
    int weak_count = 0;    // |P|
    int facet_count = 0;   // 2r
    bool iso_to_linf_m = false;
    int embeddable_min_s = 0;  // = r
};

SpaceVerdict space_verdict(const Basis& basis);
SpaceVerdict space_verdict(const ComponentSet& cs);  // n = number of supplied components

/// Block-diagonal basis of the l_inf direct sum: dimension sum(m_i),
/// ambient sum(n_i).
Basis direct_sum_basis(const std::vector<Basis>& summands);

/// Component set of the direct sum, usable when only closure models (no
/// bases) are available: every component c becomes (c, 0, ...) and (..., 0, c).
ComponentSet direct_sum_components(const std::vector<ComponentSet>& summands);

/// Extreme points of a direct sum are exactly the tuples of summand extreme
/// points, so the count is the product. The optional explicit list is the
/// Cartesian concatenation in canonical order.
struct DirectSumExtremes {
    mpz_class count;
    std::optional<std::vector<RatVec>> points;
};

DirectSumExtremes direct_sum_extremes(const std::vector<VertexList>& vertex_lists, bool with_points);

/// Sufficient condition for isometry under the given basis correspondence:
/// the canonical weak-satisfier representative sets coincide.
bool same_weak_components(const Basis& b1, const Basis& b2);

}  // namespace polyball
