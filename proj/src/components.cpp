#include "polyball/components.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace polyball {

Basis::Basis(RatMat rows) : rows_(std::move(rows)) {
    if (rows_.rows() > rows_.cols())
        throw ValidationError("basis: m > n (more vectors than ambient coordinates)");
    if (rank(rows_) != static_cast<int>(rows_.rows()))
        throw ValidationError("basis: rows are linearly dependent (rank < m)");
}

ComponentSet ComponentSet::from_vectors(std::vector<RatVec> vectors) {
    if (vectors.empty()) throw ValidationError("component set: empty");
    const std::size_t m = vectors[0].size();
    if (m == 0) throw ValidationError("component set: zero-dimensional components");
    for (const auto& v : vectors)
        if (v.size() != m) throw ValidationError("component set: components have unequal dimensions");
    ComponentSet cs;
    cs.m = static_cast<int>(m);
    cs.components = std::move(vectors);
    return cs;
}

ComponentSet components_of(const Basis& basis) {
    ComponentSet cs;
    cs.m = basis.m();
    cs.components.reserve(static_cast<std::size_t>(basis.n()));
    for (int i = 0; i < basis.n(); ++i) cs.components.push_back(basis.column(i));
    return cs;
}

std::vector<EquivClass> equivalence_classes(const ComponentSet& cs) {
    std::map<RatVec, EquivClass, RatVecLexLess> nonzero;
    EquivClass zero_class;
    zero_class.is_zero = true;
    zero_class.representative = RatVec(static_cast<std::size_t>(cs.m));
    for (std::size_t i = 0; i < cs.components.size(); ++i) {
        const RatVec& c = cs.components[i];
        if (is_zero_vec(c)) {
            zero_class.members.push_back(static_cast<int>(i));
            zero_class.member_signs.push_back(1);
            continue;
        }
        RatVec neg = negated(c);
        const bool positive = lex_less(neg, c);
        const RatVec& rep = positive ? c : neg;
        auto [it, inserted] = nonzero.try_emplace(rep);
        if (inserted) it->second.representative = rep;
        it->second.members.push_back(static_cast<int>(i));
        it->second.member_signs.push_back(positive ? 1 : -1);
    }
    std::vector<EquivClass> out;
    out.reserve(nonzero.size() + 1);
    for (auto& [rep, cls] : nonzero) out.push_back(std::move(cls));
    if (!zero_class.members.empty()) out.push_back(std::move(zero_class));
    return out;
}

std::string verdict_name(StarVerdict v) {
    switch (v) {
        case StarVerdict::Strict: return "strict";
        case StarVerdict::WeakOnly: return "weak_only";
        case StarVerdict::None: return "none";
        case StarVerdict::Zero: return "zero";
    }
    return "?";
}

std::vector<int> StarReport::strict_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        if (verdicts[i] == StarVerdict::Strict) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> StarReport::weak_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        if (verdicts[i] == StarVerdict::Strict || verdicts[i] == StarVerdict::WeakOnly)
            out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> StarReport::weak_only_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < verdicts.size(); ++i)
        if (verdicts[i] == StarVerdict::WeakOnly) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<RatVec> StarReport::strict_representatives() const {
    std::vector<RatVec> out;
    for (int i : strict_indices()) out.push_back(classes[static_cast<std::size_t>(i)].representative);
    return out;
}

std::vector<RatVec> StarReport::weak_representatives() const {
    std::vector<RatVec> out;
    for (int i : weak_indices()) out.push_back(classes[static_cast<std::size_t>(i)].representative);
    return out;
}

namespace {

StarReport classify(const ComponentSet& cs, bool with_margin) {
    StarReport report;
    report.m = cs.m;
    report.num_components = static_cast<int>(cs.components.size());
    report.classes = equivalence_classes(cs);
    report.verdicts.resize(report.classes.size(), StarVerdict::None);
    report.certificates.resize(report.classes.size());

    std::vector<std::size_t> nonzero;
    for (std::size_t k = 0; k < report.classes.size(); ++k)
        if (!report.classes[k].is_zero) nonzero.push_back(k);

    for (std::size_t k = 0; k < report.classes.size(); ++k) {
        if (report.classes[k].is_zero) {
            // A zero column evaluates to 0 under every beta; it can never
            // dominate a spanning competitor set.
            report.verdicts[k] = StarVerdict::Zero;
            continue;
        }
        std::vector<RatVec> others;
        others.reserve(nonzero.size() - 1);
        for (std::size_t j : nonzero)
            if (j != k) others.push_back(report.classes[j].representative);
        auto cert = with_margin ? strict_margin(report.classes[k].representative, others)
                                : weak_feasible(report.classes[k].representative, others);
        if (!cert) {
            report.verdicts[k] = StarVerdict::None;
            continue;
        }
        cert->target_class = static_cast<int>(k);
        if (with_margin && cert->margin > Rational(0)) {
            report.verdicts[k] = StarVerdict::Strict;
        } else {
            report.verdicts[k] = StarVerdict::WeakOnly;
        }
        report.certificates[k] = std::move(cert);
    }
    report.strict_count = static_cast<int>(report.strict_indices().size());
    report.weak_count = static_cast<int>(report.weak_indices().size());
    return report;
}

}  // namespace

StarReport star_satisfiers(const ComponentSet& cs) {
    return classify(cs, /*with_margin=*/true);
}

StarReport weak_star_satisfiers(const ComponentSet& cs) {
    return classify(cs, /*with_margin=*/false);
}

}  // namespace polyball
