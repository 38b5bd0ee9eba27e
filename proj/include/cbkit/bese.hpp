#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbkit/curves.hpp"
#include "cbkit/hypersurface.hpp"
#include "cbkit/point.hpp"

namespace cbkit {

struct BeseClause {
    std::string name;
    int k = 0;
    long bound = 0;
    long found = 0;
    bool ok = false;
    std::vector<std::size_t> witness; // filled when the clause fails
};

struct BeseHypotheses {
    int xi = 0;
    std::size_t delta = 0;
    std::vector<BeseClause> clauses;

    bool all_ok() const {
        for (const auto& c : clauses)
            if (!c.ok) return false;
        return true;
    }
};

/// Hypothesis clauses of the plane base-point-freeness theorem: at most
/// k(xi+3-k)-2 points on a curve of degree k for k = 1..floor((xi+3)/2), and
/// the displayed cardinality bound
/// delta <= max{ floor((xi+3)/2) * (xi+3-floor((xi+3)/2)) - 1, floor((xi+3)/2)^2 }.
template <class K>
BeseHypotheses bese_hypotheses(const PointConfiguration<K>& points, int xi,
                               std::size_t cap = default_subset_cap) {
    if (points.ambient_dim() != 2)
        throw WrongAmbientDimension("these hypotheses are about plane configurations");
    if (xi < 3) throw ConfigError("xi must be >= 3");

    BeseHypotheses report;
    report.xi = xi;
    report.delta = points.size();

    const long half = (xi + 3) / 2; // floor
    const long card_bound = std::max(half * (xi + 3 - half) - 1, half * half);
    BeseClause card;
    card.name = "cardinality";
    card.bound = card_bound;
    card.found = static_cast<long>(points.size());
    card.ok = card.found <= card.bound;
    report.clauses.push_back(card);

    for (int k = 1; k <= half; ++k) {
        BeseClause clause;
        clause.name = "curve-degree-" + std::to_string(k);
        clause.k = k;
        clause.bound = static_cast<long>(k) * (xi + 3 - k) - 2;
        auto [found, witness] = k == 1 ? collinear_max(points)
                                       : max_on_plane_curve(points, k, cap);
        clause.found = static_cast<long>(found);
        clause.ok = clause.found <= clause.bound;
        if (!clause.ok) clause.witness = witness;
        report.clauses.push_back(std::move(clause));
    }
    return report;
}

/// Base-point-freeness of |pi^*(O(xi)) - sum E_i| on the blowup, translated
/// to the plane: the degree-xi forms through the points must have no common
/// zero elsewhere, and at each assigned point their gradients must span the
/// full rank-2 space of conditions normal to the point (rank 1 leaves a base
/// point on the exceptional curve E_i, rank 0 puts all of E_i in the base
/// locus). The P^2(F_p) scan certifies freeness over F_p only.
struct BeseReport {
    int xi = 0;
    std::size_t delta = 0;
    std::uint64_t prime = 0;
    BeseHypotheses hypotheses;
    std::size_t system_dim = 0;
    std::vector<ProjectivePoint<Fp>> extra_base_points;
    std::vector<int> gradient_ranks;
    std::vector<std::size_t> tangent_deficient_points; // gradient rank <= 1
    std::vector<std::size_t> fully_singular_points;    // gradient rank == 0

    bool base_point_free() const {
        if (!extra_base_points.empty()) return false;
        for (int r : gradient_ranks)
            if (r != 2) return false;
        return true;
    }
};

inline BeseReport base_point_free_check(const PointConfiguration<Fp>& points, int xi,
                                        std::size_t cap = default_subset_cap,
                                        std::uint64_t budget = default_scan_budget) {
    if (points.ambient_dim() != 2)
        throw WrongAmbientDimension("base-point check needs a plane configuration");
    if (xi < 3) throw ConfigError("xi must be >= 3");
    if (points.empty()) throw ConfigError("base-point check needs at least one point");

    BeseReport report;
    report.xi = xi;
    report.delta = points.size();
    const std::uint64_t p = points[0][0].prime();
    report.prime = p;
    const std::uint64_t cost = projective_point_count(p, 2);
    if (cost > budget)
        throw BudgetExceeded("scanning P^2(F_" + std::to_string(p) + ") costs " +
                             std::to_string(cost) + " > budget " + std::to_string(budget));

    report.hypotheses = bese_hypotheses(points, xi, cap);

    const auto system = vanishing_system(points, xi);
    report.system_dim = system.size();

    // (a) common zeros beyond the assigned points
    const Fp zero(0, p), one(1, p);
    const auto check_candidate = [&](std::vector<Fp> coords) {
        ProjectivePoint<Fp> q(std::move(coords));
        for (const auto& f : system)
            if (!is_zero(evaluate_form(f, q))) return;
        for (const auto& pt : points)
            if (pt == q) return;
        report.extra_base_points.push_back(std::move(q));
    };
    if (!system.empty()) {
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b)
                check_candidate({one, Fp(static_cast<std::int64_t>(a), p),
                                 Fp(static_cast<std::int64_t>(b), p)});
        for (std::uint64_t b = 0; b < p; ++b)
            check_candidate({zero, one, Fp(static_cast<std::int64_t>(b), p)});
        check_candidate({zero, zero, one});
    }

    // (b) gradient span at each assigned point
    for (std::size_t i = 0; i < points.size(); ++i) {
        Matrix<Fp> grads(system.size(), 3, zero);
        for (std::size_t s = 0; s < system.size(); ++s)
            for (int v = 0; v < 3; ++v)
                grads.at(s, static_cast<std::size_t>(v)) =
                    evaluate_form(system[s].partial(v), points[i]);
        const int r = system.empty() ? 0 : static_cast<int>(rank(std::move(grads)));
        report.gradient_ranks.push_back(r);
        if (r <= 1) report.tangent_deficient_points.push_back(i);
        if (r == 0) report.fully_singular_points.push_back(i);
    }
    return report;
}

} // namespace cbkit
