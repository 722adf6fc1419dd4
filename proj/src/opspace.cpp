#include "polyball/opspace.hpp"

#include <algorithm>
#include <utility>

#include "polyball/spaces.hpp"

namespace polyball {

std::optional<std::string> extreme_set_violation(const std::vector<RatVec>& points) {
    if (points.empty()) throw ValidationError("extreme set: empty");
    const std::size_t m = points[0].size();
    if (m == 0) throw ValidationError("extreme set: zero-dimensional points");
    for (const auto& v : points)
        if (v.size() != m) throw ValidationError("extreme set: points have unequal dimensions");

    if (rank(RatMat::from_rows(points)) != static_cast<int>(m))
        return "not a ball: the points do not span the space";

    // v_i must lie outside the absolute convex hull of the others:
    // v_i = sum lambda_j v_j with sum |lambda_j| <= 1 must be infeasible.
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t k = points.size() - 1;  // competitors
        // Variables: lambda_1..lambda_k (free), s_1..s_k (|lambda| bounds).
        const std::size_t nvars = 2 * k;
        std::vector<LinConstraint> cons;
        for (std::size_t j = 0; j < k; ++j) {
            RatVec c1(nvars), c2(nvars);
            c1[j] = Rational(1);
            c1[k + j] = Rational(-1);  // lambda_j - s_j <= 0
            c2[j] = Rational(-1);
            c2[k + j] = Rational(-1);  // -lambda_j - s_j <= 0
            cons.push_back({std::move(c1), Rational(0)});
            cons.push_back({std::move(c2), Rational(0)});
        }
        RatVec ssum(nvars);
        for (std::size_t j = 0; j < k; ++j) ssum[k + j] = Rational(1);
        cons.push_back({std::move(ssum), Rational(1)});  // sum s_j <= 1
        for (std::size_t coord = 0; coord < m; ++coord) {
            RatVec eq(nvars);
            std::size_t jj = 0;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i) continue;
                eq[jj] = points[j][coord];
                ++jj;
            }
            const Rational target = points[i][coord];
            cons.push_back({eq, target});
            cons.push_back({negated(eq), -target});
        }
        if (find_feasible(cons, nvars))
            return "not extreme: point " + to_string(points[i]) +
                   " lies in the absolute convex hull of the other points";
    }
    return std::nullopt;
}

ExtremeSet ExtremeSet::create(std::vector<RatVec> points) {
    if (auto violation = extreme_set_violation(points)) throw ValidationError("extreme set: " + *violation);
    ExtremeSet ext;
    ext.m = static_cast<int>(points[0].size());
    ext.points = std::move(points);
    return ext;
}

Basis operator_space_basis(const ExtremeSet& ext) {
    const int r = ext.r();
    std::vector<RatVec> rows(static_cast<std::size_t>(ext.m), RatVec(static_cast<std::size_t>(r)));
    for (int k = 0; k < ext.m; ++k)
        for (int i = 0; i < r; ++i)
            rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                ext.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    return Basis(RatMat::from_rows(std::move(rows)));
}

OpSpaceReport analyze_operator_space(const ExtremeSet& ext, long long n) {
    if (n < 1) throw ValidationError("operator space: n must be >= 1");
    OpSpaceReport report;
    report.m = ext.m;
    report.n = n;
    report.r = ext.r();

    const Basis w = operator_space_basis(ext);
    for (int i = 0; i < w.m(); ++i) report.w_basis_rows.push_back(w.matrix().row(static_cast<std::size_t>(i)));

    const ComponentSet cs = components_of(w);
    const StarReport stars = star_satisfiers(cs);
    report.strict_count_q = stars.strict_count;

    const BallPolytope ball = unit_ball_hrep(cs);
    report.w_vertices = enumerate_vertices(ball);
    const auto ext_w = static_cast<unsigned long>(report.w_vertices.size());

    report.facet_count = 2LL * stars.strict_count * n;
    report.facet_formula = std::to_string(2 * stars.strict_count) + "n";
    mpz_ui_pow_ui(report.extreme_contractions.get_mpz_t(), ext_w, static_cast<unsigned long>(n));
    report.extreme_formula = std::to_string(ext_w) + "^n";

    // Re-derive both counts from the block-diagonal sum when that stays desk-scale.
    const long long classes = static_cast<long long>(ball.classes.size());
    if (n <= 2 && ext.m * n <= 6 && classes * n <= 10) {
        std::vector<Basis> copies(static_cast<std::size_t>(n), w);
        const Basis sum = direct_sum_basis(copies);
        const ComponentSet sum_cs = components_of(sum);
        const StarReport sum_stars = star_satisfiers(sum_cs);
        if (2LL * sum_stars.strict_count != report.facet_count)
            throw InternalInconsistencyError("operator space: facet count from the sum basis (" +
                                             std::to_string(2 * sum_stars.strict_count) + ") != 2*q*n (" +
                                             std::to_string(report.facet_count) + ")");
        const VertexList sum_vertices = enumerate_vertices(unit_ball_hrep(sum_cs));
        if (mpz_class(static_cast<unsigned long>(sum_vertices.size())) != report.extreme_contractions)
            throw InternalInconsistencyError("operator space: extreme count from the sum basis (" +
                                             std::to_string(sum_vertices.size()) + ") != ext_W^n");
        report.cross_checked = true;
    }
    return report;
}

Rational operator_norm(const RatMat& a, const ExtremeSet& ext) {
    if (a.cols() != static_cast<std::size_t>(ext.m))
        throw ValidationError("operator_norm: matrix has " + std::to_string(a.cols()) +
                              " columns, expected " + std::to_string(ext.m));
    Rational best(0);
    for (const auto& v : ext.points) {
        for (std::size_t row = 0; row < a.rows(); ++row) {
            Rational val = dot(a.row(row), v).abs();
            if (val > best) best = val;
        }
    }
    return best;
}

}  // namespace polyball
