#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "polyball/sampling.hpp"
#include "polyball/spaces.hpp"

using namespace polyball;

namespace {

Basis basis_from(std::vector<std::vector<Rational>> rows) {
    std::vector<RatVec> rv;
    for (auto& r : rows) rv.push_back(RatVec(r.begin(), r.end()));
    return Basis(RatMat::from_rows(std::move(rv)));
}

RatVec rv(std::vector<long> xs) {
    RatVec v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

std::set<RatVec, RatVecLexLess> to_set(const std::vector<RatVec>& vs) { return {vs.begin(), vs.end()}; }

Basis optimal_basis() {
    return basis_from({{Rational(3), Rational(5, 2), Rational(2)}, {Rational(2), Rational(5, 2), Rational(3)}});
}

Basis w2_basis() {
    return basis_from({{Rational(4), Rational(7, 2), Rational(3)}, {Rational(3), Rational(7, 2), Rational(4)}});
}

Basis w1_basis() {
    return basis_from({{Rational(3), Rational(0), Rational(2)}, {Rational(0), Rational(3), Rational(2)}});
}

Basis y3_basis() {
    return basis_from({{Rational(3), Rational(0), Rational(1), Rational(5, 2)},
                       {Rational(2), Rational(5), Rational(0), Rational(4)},
                       {Rational(1), Rational(1), Rational(5), Rational(7, 2)}});
}

Basis lastex_basis() {
    return basis_from({{Rational(1), Rational(0), Rational(1), Rational(0)},
                       {Rational(0), Rational(1), Rational(1), Rational(0)},
                       {Rational(0), Rational(0), Rational(0), Rational(1)}});
}

Basis hexagon_basis() {
    return basis_from({{Rational(1), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)}});
}

Basis identity_basis(int m) {
    std::vector<RatVec> rows(static_cast<std::size_t>(m), RatVec(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    return Basis(RatMat::from_rows(std::move(rows)));
}

}  // namespace

TEST_CASE("embed_into_linf: projection onto strict representatives") {
    {
        const auto map = embed_into_linf(optimal_basis());
        CHECK(map.r == 2);
        CHECK(to_set(map.strict_reps) == to_set({rv({3, 2}), rv({2, 3})}));
        // image rows: row k holds coordinate k of each strict rep
        REQUIRE(map.image_rows.size() == 2);
        CHECK(map.image_rows[0] == rv({2, 3}));  // strict reps in canonical order: (2,3), (3,2)
        CHECK(map.image_rows[1] == rv({3, 2}));
    }
    {
        const auto map = embed_into_linf(w2_basis());
        CHECK(map.r == 2);
        CHECK(to_set(map.strict_reps) == to_set({rv({4, 3}), rv({3, 4})}));
    }
    {
        const auto map = embed_into_linf(identity_basis(3));
        CHECK(map.r == 3);
        CHECK(to_set(map.strict_reps) ==
              to_set({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}));
    }
}

TEST_CASE("embedding preserves the norm exactly on random coefficients") {
    std::mt19937_64 rng(808);
    for (const Basis& b : {optimal_basis(), w1_basis(), y3_basis(), lastex_basis()}) {
        const auto map = embed_into_linf(b);
        const auto cs = components_of(b);
        for (int trial = 0; trial < 50; ++trial) {
            const RatVec beta = detail::random_ratvec(rng, b.m(), 7, 3);
            Rational src(0), img(0);
            for (const auto& c : cs.components) {
                const Rational v = dot(beta, c).abs();
                if (v > src) src = v;
            }
            for (const auto& c : map.strict_reps) {
                const Rational v = dot(beta, c).abs();
                if (v > img) img = v;
            }
            CHECK(src == img);
        }
    }
}

TEST_CASE("decide_embeddability and isometry verdicts") {
    CHECK_FALSE(decide_embeddability(y3_basis(), 3));  // r = 4
    CHECK(decide_embeddability(y3_basis(), 4));
    CHECK_FALSE(decide_embeddability(w1_basis(), 2));  // r = 3
    CHECK(decide_embeddability(w1_basis(), 3));
    CHECK(decide_embeddability(y3_basis(), y3_basis().n()));  // s = n always works

    CHECK(decide_isometric_to_linfm(w2_basis()));
    CHECK_FALSE(decide_isometric_to_linfm(w1_basis()));
    CHECK(decide_isometric_to_linfm(identity_basis(2)));
    CHECK(decide_isometric_to_linfm(optimal_basis()));
    CHECK_FALSE(decide_isometric_to_linfm(y3_basis()));
}

TEST_CASE("space_verdict fields") {
    const auto v = space_verdict(w1_basis());
    CHECK(v.m == 2);
    CHECK(v.n == 3);
    CHECK(v.strict_count == 3);
    CHECK(v.weak_count == 3);
    CHECK(v.facet_count == 6);
    CHECK_FALSE(v.iso_to_linf_m);
    CHECK(v.embeddable_min_s == 3);
}

TEST_CASE("direct_sum_basis: block diagonal stacking") {
    {
        const auto sum = direct_sum_basis({lastex_basis(), lastex_basis()});
        CHECK(sum.m() == 6);
        CHECK(sum.n() == 8);
        CHECK(star_satisfiers(components_of(sum)).strict_count == 8);
    }
    {
        const auto sum = direct_sum_basis({identity_basis(1), identity_basis(1)});
        CHECK(sum.m() == 2);
        CHECK(sum.n() == 2);
        CHECK(sum.matrix().row(0) == rv({1, 0}));
        CHECK(sum.matrix().row(1) == rv({0, 1}));
    }
    {
        const auto sum = direct_sum_basis({hexagon_basis(), hexagon_basis()});
        const auto report = star_satisfiers(components_of(sum));
        CHECK(report.strict_count == 6);
        CHECK(2 * report.strict_count == 12);  // facets
    }
}

TEST_CASE("direct_sum_extremes: products and explicit lists") {
    const auto lastex_verts = enumerate_vertices(unit_ball_hrep(lastex_basis()));
    REQUIRE(lastex_verts.size() == 12);
    {
        const auto prod = direct_sum_extremes({lastex_verts, lastex_verts}, false);
        CHECK(prod.count == 144);
    }
    {
        const auto square = enumerate_vertices(unit_ball_hrep(identity_basis(2)));
        REQUIRE(square.size() == 4);
        const auto prod = direct_sum_extremes({square, square}, true);
        CHECK(prod.count == 16);  // the ball of l_inf^4 has 2^4 vertices
        REQUIRE(prod.points.has_value());
        CHECK(prod.points->size() == 16);
        // must equal the direct enumeration on the sum basis
        const auto direct =
            enumerate_vertices(unit_ball_hrep(direct_sum_basis({identity_basis(2), identity_basis(2)})));
        auto sorted = *prod.points;
        std::sort(sorted.begin(), sorted.end(), RatVecLexLess{});
        CHECK(sorted == direct.vertices);
    }
    {
        const auto hex = enumerate_vertices(unit_ball_hrep(hexagon_basis()));
        REQUIRE(hex.size() == 6);
        const auto prod = direct_sum_extremes({hex, hex}, false);
        CHECK(prod.count == 36);
        const auto direct = enumerate_vertices(unit_ball_hrep(direct_sum_basis({hexagon_basis(), hexagon_basis()})));
        CHECK(direct.size() == 36);
    }
}

TEST_CASE("same_weak_components: permutation invariance and strictness of the condition") {
    const auto permuted = basis_from({{Rational(3), Rational(2), Rational(5, 2)},
                                      {Rational(2), Rational(3), Rational(5, 2)}});
    CHECK(same_weak_components(optimal_basis(), permuted));
    // the spaces are isometric, but the weak sets differ: the condition is
    // sufficient, not necessary
    const auto image = basis_from({{Rational(3), Rational(2)}, {Rational(2), Rational(3)}});
    CHECK_FALSE(same_weak_components(optimal_basis(), image));
    CHECK(same_weak_components(identity_basis(2), identity_basis(2)));
    CHECK_THROWS_AS(same_weak_components(identity_basis(2), identity_basis(3)), ValidationError);
}

TEST_CASE("property: k-fold sums multiply strict counts and extreme counts") {
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 10) {
        std::uniform_int_distribution<int> mm(1, 2), nn(1, 3);
        const int m1 = mm(rng), m2 = mm(rng);
        const int n1 = std::max(m1, nn(rng)), n2 = std::max(m2, nn(rng));
        std::vector<RatVec> rows1, rows2;
        for (int i = 0; i < m1; ++i) rows1.push_back(detail::random_ratvec(rng, n1, 4, 2));
        for (int i = 0; i < m2; ++i) rows2.push_back(detail::random_ratvec(rng, n2, 4, 2));
        if (rank(RatMat::from_rows(rows1)) != m1 || rank(RatMat::from_rows(rows2)) != m2) continue;
        const Basis a(RatMat::from_rows(rows1));
        const Basis b(RatMat::from_rows(rows2));
        const auto ra = star_satisfiers(components_of(a));
        const auto rb = star_satisfiers(components_of(b));
        const auto sum = direct_sum_basis({a, b});
        const auto rs = star_satisfiers(components_of(sum));
        CHECK(rs.strict_count == ra.strict_count + rb.strict_count);
        const auto va = enumerate_vertices(unit_ball_hrep(a));
        const auto vb = enumerate_vertices(unit_ball_hrep(b));
        const auto vs = enumerate_vertices(unit_ball_hrep(sum));
        CHECK(vs.size() == va.size() * vb.size());
        ++done;
    }
}

TEST_CASE("iso to l_inf^m implies cube counts for the image") {
    for (const Basis& b : {w2_basis(), optimal_basis(), identity_basis(3)}) {
        if (!decide_isometric_to_linfm(b)) continue;
        const auto verts = enumerate_vertices(unit_ball_hrep(b));
        CHECK(verts.size() == (1u << static_cast<unsigned>(b.m())));  // 2^m extreme points
        CHECK(facet_classes(unit_ball_hrep(b)).facet_count == 2 * b.m());
    }
}
