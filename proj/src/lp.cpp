#include "polyball/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace polyball {

namespace {

// Dense tableau simplex over exact rationals. Free variables are split into
// differences of nonnegatives; rows with negative right-hand sides get
// artificial variables and a phase-1 pass. Bland's rule in both phases.
class Simplex {
  public:
    Simplex(const RatVec& objective, const std::vector<LinConstraint>& cons) : nfree_(objective.size()) {
        for (const auto& c : cons)
            if (c.normal.size() != nfree_) throw ValidationError("lp: constraint dimension does not match objective");
        const std::size_t k = cons.size();
        nstruct_ = 2 * nfree_;
        nslack_ = k;
        std::size_t nart = 0;
        for (const auto& c : cons)
            if (c.bound.sign() < 0) ++nart;
        ncols_ = nstruct_ + nslack_ + nart;
        rows_.assign(k, RatVec(ncols_));
        rhs_.assign(k, Rational());
        basis_.assign(k, 0);
        std::size_t next_art = nstruct_ + nslack_;
        for (std::size_t i = 0; i < k; ++i) {
            const int s = cons[i].bound.sign() < 0 ? -1 : 1;
            const Rational sr(s);
            for (std::size_t j = 0; j < nfree_; ++j) {
                rows_[i][j] = sr * cons[i].normal[j];
                rows_[i][nfree_ + j] = -rows_[i][j];
            }
            rows_[i][nstruct_ + i] = sr;  // slack
            rhs_[i] = sr * cons[i].bound;
            if (s < 0) {
                rows_[i][next_art] = Rational(1);
                basis_[i] = next_art;
                ++next_art;
            } else {
                basis_[i] = nstruct_ + i;
            }
        }
        first_art_ = nstruct_ + nslack_;
        objective_ = objective;
    }

    LpOutcome solve() {
        if (rows_.empty()) {
            LpOutcome out;
            if (std::all_of(objective_.begin(), objective_.end(), [](const Rational& c) { return c.is_zero(); })) {
                out.status = LpStatus::Optimal;
                out.value = Rational(0);
                out.point = RatVec(nfree_);
            } else {
                out.status = LpStatus::Unbounded;
            }
            return out;
        }

        if (ncols_ > first_art_) {
            if (!phase1()) return LpOutcome{LpStatus::Infeasible, Rational(), {}};
        }

        // Phase 2: reduced-cost row for the real objective (cost c_j on u_j,
        // -c_j on w_j, 0 on slacks; artificial columns are barred).
        RatVec cost(ncols_);
        for (std::size_t j = 0; j < nfree_; ++j) {
            cost[j] = objective_[j];
            cost[nfree_ + j] = -objective_[j];
        }
        load_objective(cost);
        const bool bounded = run(/*allow_artificials=*/false);
        if (!bounded) return LpOutcome{LpStatus::Unbounded, Rational(), {}};

        LpOutcome out;
        out.status = LpStatus::Optimal;
        out.value = obj_value_;
        out.point = RatVec(nfree_);
        RatVec col_value(ncols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) col_value[basis_[i]] = rhs_[i];
        for (std::size_t j = 0; j < nfree_; ++j) out.point[j] = col_value[j] - col_value[nfree_ + j];
        return out;
    }

  private:
    // Maximize -sum(artificials); feasible iff the optimum is 0.
    bool phase1() {
        RatVec cost(ncols_);
        for (std::size_t j = first_art_; j < ncols_; ++j) cost[j] = Rational(-1);
        load_objective(cost);
        const bool bounded = run(/*allow_artificials=*/true);
        if (!bounded) throw InternalInconsistencyError("lp: phase 1 unbounded");
        if (!obj_value_.is_zero()) return false;
        // Drive any artificial still basic (at value 0) out of the basis, or
        // drop its row when the row is zero on all non-artificial columns.
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_art_) {
                ++i;
                continue;
            }
            std::size_t enter = SIZE_MAX;
            for (std::size_t j = 0; j < first_art_; ++j) {
                if (!rows_[i][j].is_zero()) {
                    enter = j;
                    break;
                }
            }
            if (enter == SIZE_MAX) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, enter);
                ++i;
            }
        }
        return true;
    }

    void load_objective(const RatVec& cost) {
        obj_row_.assign(ncols_, Rational());
        obj_value_ = Rational(0);
        // z_j - c_j with z from the current basis.
        for (std::size_t j = 0; j < ncols_; ++j) obj_row_[j] = -cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb.is_zero()) continue;
            for (std::size_t j = 0; j < ncols_; ++j) obj_row_[j] += cb * rows_[i][j];
            obj_value_ += cb * rhs_[i];
        }
    }

    // Returns false when unbounded.
    bool run(bool allow_artificials) {
        const std::size_t col_limit = allow_artificials ? ncols_ : first_art_;
        long guard = 0;
        while (true) {
            if (++guard > 2'000'000) throw InternalInconsistencyError("lp: pivot guard tripped (cycling?)");
            // Bland: entering = smallest improving column index.
            std::size_t enter = SIZE_MAX;
            for (std::size_t j = 0; j < col_limit; ++j) {
                if (obj_row_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == SIZE_MAX) return true;
            // Leaving: min ratio, ties broken by smallest basic variable index.
            std::size_t leave = SIZE_MAX;
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter].sign() <= 0) continue;
                Rational ratio = rhs_[i] / rows_[i][enter];
                if (leave == SIZE_MAX || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == SIZE_MAX) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t prow, std::size_t pcol) {
        const Rational p = rows_[prow][pcol];
        for (auto& x : rows_[prow]) x /= p;
        rhs_[prow] /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == prow) continue;
            const Rational f = rows_[i][pcol];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[prow][j];
            rhs_[i] -= f * rhs_[prow];
        }
        const Rational f = obj_row_[pcol];
        if (!f.is_zero()) {
            for (std::size_t j = 0; j < ncols_; ++j) obj_row_[j] -= f * rows_[prow][j];
            obj_value_ -= f * rhs_[prow];
        }
        basis_[prow] = pcol;
    }

    std::size_t nfree_;
    std::size_t nstruct_ = 0;
    std::size_t nslack_ = 0;
    std::size_t first_art_ = 0;
    std::size_t ncols_ = 0;
    std::vector<RatVec> rows_;
    RatVec rhs_;
    std::vector<std::size_t> basis_;
    RatVec obj_row_;
    Rational obj_value_;
    RatVec objective_;
};

}  // namespace

LpOutcome lp_optimize(const RatVec& objective, const std::vector<LinConstraint>& constraints) {
    return Simplex(objective, constraints).solve();
}

std::optional<RatVec> find_feasible(const std::vector<LinConstraint>& constraints, std::size_t nvars) {
    auto out = lp_optimize(RatVec(nvars), constraints);
    if (out.status != LpStatus::Optimal) return std::nullopt;
    return out.point;
}

namespace {

void append_abs_pair(std::vector<LinConstraint>& cons, const RatVec& normal, const Rational& bound) {
    cons.push_back({normal, bound});
    cons.push_back({negated(normal), bound});
}

}  // namespace

std::optional<StarCertificate> strict_margin(const RatVec& target, const std::vector<RatVec>& others) {
    if (is_zero_vec(target))
        throw ValidationError("strict_margin: zero component cannot be normalized to <beta, target> = 1");
    const std::size_t m = target.size();
    for (const auto& c : others)
        if (c.size() != m) throw ValidationError("strict_margin: competitor dimension mismatch");

    if (others.empty()) {
        // t would be unbounded; report the capped margin 1 with any beta
        // solving <beta, target> = 1.
        RatVec beta = target;
        const Rational scale = Rational(1) / dot(target, target);
        for (auto& x : beta) x *= scale;
        return StarCertificate{std::move(beta), Rational(1)};
    }

    // Variables (beta_1..beta_m, t); maximize t.
    std::vector<LinConstraint> cons;
    cons.reserve(2 * others.size() + 3);
    auto lift = [m](const RatVec& v, const Rational& tcoef) {
        RatVec x(m + 1);
        std::copy(v.begin(), v.end(), x.begin());
        x[m] = tcoef;
        return x;
    };
    cons.push_back({lift(target, Rational(0)), Rational(1)});
    cons.push_back({lift(negated(target), Rational(0)), Rational(-1)});
    for (const auto& c : others) {
        cons.push_back({lift(c, Rational(1)), Rational(1)});
        cons.push_back({lift(negated(c), Rational(1)), Rational(1)});
    }
    RatVec tdir(m + 1);
    tdir[m] = Rational(-1);
    cons.push_back({tdir, Rational(0)});  // t >= 0

    RatVec objective(m + 1);
    objective[m] = Rational(1);
    auto out = lp_optimize(objective, cons);
    if (out.status == LpStatus::Infeasible) return std::nullopt;
    if (out.status != LpStatus::Optimal)
        throw InternalInconsistencyError("strict_margin: margin LP unbounded with nonempty competitor set");
    StarCertificate cert;
    cert.beta.assign(out.point.begin(), out.point.begin() + static_cast<std::ptrdiff_t>(m));
    cert.margin = out.value;
    return cert;
}

std::optional<StarCertificate> weak_feasible(const RatVec& target, const std::vector<RatVec>& others) {
    if (is_zero_vec(target))
        throw ValidationError("weak_feasible: zero component cannot be normalized to <beta, target> = 1");
    const std::size_t m = target.size();
    for (const auto& c : others)
        if (c.size() != m) throw ValidationError("weak_feasible: competitor dimension mismatch");
    std::vector<LinConstraint> cons;
    cons.push_back({target, Rational(1)});
    cons.push_back({negated(target), Rational(-1)});
    for (const auto& c : others) append_abs_pair(cons, c, Rational(1));
    auto point = find_feasible(cons, m);
    if (!point) return std::nullopt;
    return StarCertificate{std::move(*point), Rational(0)};
}

RedundancyResult redundancy_check(std::size_t index, const std::vector<LinConstraint>& constraints) {
    if (index >= constraints.size()) throw ValidationError("redundancy_check: constraint index out of range");
    const LinConstraint& target = constraints[index];
    std::vector<LinConstraint> relaxed;
    relaxed.reserve(constraints.size() + 1);
    for (std::size_t i = 0; i < constraints.size(); ++i)
        if (i != index) relaxed.push_back(constraints[i]);
    // Cap keeps the relaxed LP bounded; any value above the bound already
    // certifies irredundancy.
    relaxed.push_back({target.normal, target.bound + Rational(1)});
    auto out = lp_optimize(target.normal, relaxed);
    if (out.status != LpStatus::Optimal)
        throw InternalInconsistencyError("redundancy_check: relaxed system infeasible; precondition requires a feasible system");
    return RedundancyResult{out.value > target.bound, out.value, out.point};
}

}  // namespace polyball
