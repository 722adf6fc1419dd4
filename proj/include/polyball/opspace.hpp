#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "polyball/components.hpp"
#include "polyball/polytope.hpp"

namespace polyball {

/**
 * The extreme points of the unit ball of an m-dimensional polyhedral space,
 * given up to sign: the full set is {+-v_1, ..., +-v_r}. Validation checks
 * that the points span and that none lies in the absolute convex hull of
 * the others.
 */
struct ExtremeSet {
    int m = 0;
    std::vector<RatVec> points;

    static ExtremeSet create(std::vector<RatVec> points);  // validates, throws ValidationError
    int r() const { return static_cast<int>(points.size()); }
};

/// nullopt when the points form a valid extreme set; otherwise a message
/// naming the violation (span deficiency, or the offending hull member).
std::optional<std::string> extreme_set_violation(const std::vector<RatVec>& points);

/**
 * The m x r basis whose i-th component (column) is exactly v_i; its
 * coefficient-space norm max_i |<beta, v_i>| is the dual norm of the source
 * space evaluated through its extreme points.
 */
Basis operator_space_basis(const ExtremeSet& ext);

/**
 * Counts for the space of operators into l_inf^n: it is isometric to the
 * n-fold l_inf direct sum of W = span(operator_space_basis), so facets are
 * 2*q*n (q = strict classes of W) and extreme contractions are |Ext(B_W)|^n.
 * For n <= 2 at small sizes the counts are re-derived by running the full
 * pipeline on the block-diagonal sum basis.
 */
struct OpSpaceReport {
    int m = 0;
    long long n = 0;
    int r = 0;              // extreme-point pairs of the source ball
    int strict_count_q = 0; // strict classes of W
    std::vector<RatVec> w_basis_rows;
    VertexList w_vertices;
    long long facet_count = 0;             // 2*q*n
    std::string facet_formula;             // e.g. "8n"
    mpz_class extreme_contractions;        // ext_W^n
    std::string extreme_formula;           // e.g. "12^n"
    bool cross_checked = false;
};

OpSpaceReport analyze_operator_space(const ExtremeSet& ext, long long n);

/// Exact operator norm of the matrix A (rows = output coordinates) on the
/// space with the given extreme set: max_i ||A v_i||_inf.
Rational operator_norm(const RatMat& a, const ExtremeSet& ext);

}  // namespace polyball
