#include "polyball/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <utility>

namespace polyball {

namespace {

BallPolytope build_hrep(std::vector<EquivClass> classes, int m, int num_coordinates) {
    BallPolytope p;
    p.m = m;
    p.num_coordinates = num_coordinates;
    for (auto& cls : classes)
        if (!cls.is_zero) p.classes.push_back(std::move(cls));
    if (p.classes.empty()) throw ValidationError("unit ball: every component is zero");
    std::vector<RatVec> reps;
    reps.reserve(p.classes.size());
    for (const auto& cls : p.classes) reps.push_back(cls.representative);
    if (rank(RatMat::from_rows(reps)) != m)
        throw ValidationError("unit ball: components do not span the coefficient space (ball unbounded)");
    p.constraints.reserve(2 * p.classes.size());
    for (const auto& cls : p.classes) {
        p.constraints.push_back({cls.representative, Rational(1)});
        p.constraints.push_back({negated(cls.representative), Rational(1)});
    }
    return p;
}

}  // namespace

BallPolytope unit_ball_hrep(const Basis& basis) {
    return unit_ball_hrep(components_of(basis));
}

BallPolytope unit_ball_hrep(const ComponentSet& cs) {
    return build_hrep(equivalence_classes(cs), cs.m, static_cast<int>(cs.components.size()));
}

Rational coefficient_norm(const BallPolytope& p, const RatVec& beta) {
    if (beta.size() != static_cast<std::size_t>(p.m))
        throw ValidationError("coefficient vector has wrong dimension");
    Rational best(0);
    for (const auto& cls : p.classes) {
        Rational v = dot(beta, cls.representative).abs();
        if (v > best) best = v;
    }
    return best;
}

namespace {

// Tight data of an on-sphere point; assumes the norm is exactly 1.
FaceDescriptor face_of(const BallPolytope& p, const RatVec& beta) {
    FaceDescriptor fd;
    std::vector<RatVec> tight_reps;
    std::vector<std::pair<int, int>> coord_signs;  // (coordinate, sign)
    for (std::size_t k = 0; k < p.classes.size(); ++k) {
        const auto& cls = p.classes[k];
        const Rational v = dot(beta, cls.representative);
        const Rational av = v.abs();
        if (av != Rational(1)) continue;
        fd.tight_classes.push_back(static_cast<int>(k));
        tight_reps.push_back(cls.representative);
        for (std::size_t t = 0; t < cls.members.size(); ++t)
            coord_signs.emplace_back(cls.members[t], cls.member_signs[t] * v.sign());
    }
    std::sort(coord_signs.begin(), coord_signs.end());
    for (auto& [coord, sign] : coord_signs) {
        fd.tight_coords.push_back(coord);
        fd.tight_signs.push_back(sign);
    }
    fd.dim_estimate = tight_reps.empty() ? p.m : p.m - rank(RatMat::from_rows(tight_reps));
    return fd;
}

}  // namespace

int default_thread_count() {
    if (const char* env = std::getenv("POLYBALL_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

VertexList enumerate_vertices(const BallPolytope& p, int threads) {
    const int m = p.m;
    const std::size_t ncons = p.constraints.size();
    if (threads <= 0) threads = default_thread_count();

    // All m-subsets of the constraint set; a subset holding both halves of
    // an antipodal pair is singular by construction, so it is skipped here.
    std::vector<std::size_t> flat;  // m indices per candidate subset
    {
        std::vector<std::size_t> idx(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        const auto has_pair = [](const std::vector<std::size_t>& s) {
            for (std::size_t a = 0; a + 1 < s.size(); ++a)
                if ((s[a] ^ 1u) == s[a + 1]) return true;  // +-pair of one class
            return false;
        };
        if (static_cast<std::size_t>(m) <= ncons) {
            while (true) {
                if (!has_pair(idx)) flat.insert(flat.end(), idx.begin(), idx.end());
                // next combination
                int pos = m - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == ncons - static_cast<std::size_t>(m - pos)) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < m; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    const std::size_t total = flat.size() / static_cast<std::size_t>(m);

    using Hit = std::pair<RatVec, FaceDescriptor>;
    auto scan = [&](std::size_t begin, std::size_t end, std::vector<Hit>& out) {
        RatVec rhs(static_cast<std::size_t>(m));
        for (std::size_t s = begin; s < end; ++s) {
            std::vector<RatVec> rows;
            rows.reserve(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) {
                const auto ci = flat[s * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
                rows.push_back(p.constraints[ci].normal);
                rhs[static_cast<std::size_t>(j)] = p.constraints[ci].bound;
            }
            auto beta = solve_square(RatMat::from_rows(std::move(rows)), rhs);
            if (!beta) continue;
            if (coefficient_norm(p, *beta) != Rational(1)) continue;  // violates some constraint
            out.emplace_back(std::move(*beta), FaceDescriptor{});
        }
    };

    std::vector<Hit> hits;
    const int nworkers = std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(total, 1));
    if (nworkers <= 1 || total < 64) {
        scan(0, total, hits);
    } else {
        std::vector<std::vector<Hit>> buckets(static_cast<std::size_t>(nworkers));
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + static_cast<std::size_t>(nworkers) - 1) / static_cast<std::size_t>(nworkers);
        for (int w = 0; w < nworkers; ++w) {
            const std::size_t b = static_cast<std::size_t>(w) * chunk;
            const std::size_t e = std::min(total, b + chunk);
            if (b >= e) break;
            pool.emplace_back(scan, b, e, std::ref(buckets[static_cast<std::size_t>(w)]));
        }
        for (auto& t : pool) t.join();
        for (auto& b : buckets)
            for (auto& h : b) hits.push_back(std::move(h));
    }

    // Canonical merge: lexicographic order, duplicates (degenerate vertices
    // reached through several subsets) collapsed.
    std::map<RatVec, FaceDescriptor, RatVecLexLess> dedup;
    for (auto& [beta, fd] : hits) dedup.try_emplace(std::move(beta), std::move(fd));
    VertexList out;
    out.vertices.reserve(dedup.size());
    out.faces.reserve(dedup.size());
    for (auto& [beta, fd] : dedup) {
        out.faces.push_back(face_of(p, beta));
        out.vertices.push_back(beta);
    }
    return out;
}

FacetReport facet_classes(const BallPolytope& p) {
    FacetReport report;
    report.entries.reserve(p.classes.size());
    for (std::size_t k = 0; k < p.classes.size(); ++k) {
        auto rc = redundancy_check(2 * k, p.constraints);
        FacetClassEntry e;
        e.class_index = static_cast<int>(k);
        e.facet = rc.irredundant;
        e.relaxed_value = std::move(rc.relaxed_value);
        e.witness = std::move(rc.witness);
        if (e.facet) report.facet_count += 2;  // the +- pair
        report.entries.push_back(std::move(e));
    }
    return report;
}

FaceDescriptor minimal_face(const BallPolytope& p, const RatVec& beta) {
    const Rational norm = coefficient_norm(p, beta);
    if (norm < Rational(1))
        throw ValidationError("minimal_face: point is not on the unit sphere (norm " + norm.str() + " < 1)");
    if (norm > Rational(1))
        throw ValidationError("minimal_face: point is outside the unit ball (norm " + norm.str() + " > 1)");
    return face_of(p, beta);
}

bool is_extreme(const BallPolytope& p, const RatVec& beta) {
    return minimal_face(p, beta).dim_estimate == 0;
}

bool is_maximal_star_constant(const BallPolytope& p, const RatVec& beta) {
    const FaceDescriptor fd = minimal_face(p, beta);  // also enforces the *-constant precondition
    std::vector<char> tight(p.classes.size(), 0);
    for (int k : fd.tight_classes) tight[static_cast<std::size_t>(k)] = 1;

    // Base system: alpha agrees with beta on every tight class and stays in
    // the ball elsewhere.
    std::vector<LinConstraint> base;
    for (std::size_t k = 0; k < p.classes.size(); ++k) {
        const RatVec& rep = p.classes[k].representative;
        if (tight[k]) {
            const Rational v = dot(beta, rep);  // +-1
            base.push_back({rep, v});
            base.push_back({negated(rep), -v});
        } else {
            base.push_back({rep, Rational(1)});
            base.push_back({negated(rep), Rational(1)});
        }
    }
    for (std::size_t k = 0; k < p.classes.size(); ++k) {
        if (tight[k]) continue;
        const RatVec& rep = p.classes[k].representative;
        for (int sign : {1, -1}) {
            auto cons = base;
            const Rational target(sign);
            cons.push_back({rep, target});
            cons.push_back({negated(rep), -target});
            if (find_feasible(cons, static_cast<std::size_t>(p.m))) return false;  // proper extension exists
        }
    }
    return true;
}

}  // namespace polyball
