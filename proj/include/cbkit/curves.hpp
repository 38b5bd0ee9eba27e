#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cbkit/conditions.hpp"
#include "cbkit/point.hpp"
#include "cbkit/projection.hpp"

namespace cbkit {

enum class Status { Certified, Violated, Unknown };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Certified: return "certified";
        case Status::Violated: return "violated";
        default: return "unknown";
    }
}

/// Basis of all degree-k forms vanishing on S: the canonical kernel of the
/// evaluation matrix, one form per free monomial column.
template <class K>
std::vector<Form<K>> vanishing_system(const PointConfiguration<K>& s, int k) {
    if (k < 0) throw ConfigError("degree must be >= 0");
    if (s.empty())
        throw ConfigError("vanishing system of an empty configuration needs a field context");
    const MonomialBasis basis = monomial_basis(s.ambient_dim() + 1, k);
    const K one = one_like(s[0][0]);
    const auto kernel = kernel_basis(evaluation_matrix(s, k, basis), one);
    std::vector<Form<K>> out;
    out.reserve(kernel.size());
    for (const auto& coeffs : kernel) {
        Form<K> f(basis.num_vars, k);
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!is_zero(coeffs[j])) f.set_coeff(basis.monomials[j], coeffs[j]);
        out.push_back(std::move(f));
    }
    return out;
}

/// Plane test: S lies on a curve of degree k iff some nonzero degree-k form
/// vanishes on all of S, i.e. the evaluation matrix has a kernel.
template <class K>
bool lies_on_plane_curve(const PointConfiguration<K>& s, int k) {
    if (s.ambient_dim() != 2)
        throw WrongAmbientDimension("plane-curve test needs ambient dimension 2");
    if (k < 1) throw ConfigError("curve degree must be >= 1");
    return conditions_rank(s, k) < binomial(static_cast<unsigned>(k) + 2, 2);
}

inline constexpr std::size_t default_subset_cap = 24;

namespace detail {

/// Incremental row basis for the subset search: rows are reduced against the
/// pivots already chosen, a zero reduction means the candidate point is
/// dependent on the subset so far.
template <class K>
class RowBasis {
public:
    explicit RowBasis(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }

    bool try_add(std::vector<K> row) {
        for (std::size_t b = 0; b < rows_.size(); ++b) {
            const K& lead = row[pivot_[b]];
            if (is_zero(lead)) continue;
            const K f = lead;
            for (std::size_t c = 0; c < cols_; ++c)
                row[c] = row[c] - f * rows_[b][c];
        }
        std::size_t piv = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_zero(row[c])) {
                piv = c;
                break;
            }
        if (piv == cols_) return false;
        const K inv = inverse(row[piv]);
        for (std::size_t c = 0; c < cols_; ++c) row[c] = row[c] * inv;
        rows_.push_back(std::move(row));
        pivot_.push_back(piv);
        return true;
    }

    void pop() {
        rows_.pop_back();
        pivot_.pop_back();
    }

private:
    std::size_t cols_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivot_;
};

} // namespace detail

/// Largest subset of a plane configuration lying on a degree-k curve, with
/// the lexicographically smallest maximizing witness. Branch and bound over
/// index subsets; a branch dies once its points already span every degree-k
/// condition, since no superset can then admit a vanishing form.
template <class K>
std::pair<std::size_t, std::vector<std::size_t>> max_on_plane_curve(
    const PointConfiguration<K>& sigma, int k, std::size_t cap = default_subset_cap) {
    if (sigma.ambient_dim() != 2)
        throw WrongAmbientDimension("plane-curve search needs ambient dimension 2");
    if (k < 1) throw ConfigError("curve degree must be >= 1");
    if (sigma.size() > cap)
        throw SearchCapExceeded("configuration of " + std::to_string(sigma.size()) +
                                " points exceeds the subset search cap " + std::to_string(cap));
    const std::size_t n = sigma.size();
    if (n == 0) return {0, {}};

    const MonomialBasis basis = monomial_basis(3, k);
    const std::size_t full = basis.size();
    const Matrix<K> eval = evaluation_matrix(sigma, k, basis);

    detail::RowBasis<K> rows(full);
    std::vector<std::size_t> current, best_witness;
    std::size_t best = 0;
    bool have_best = false;

    // include-first depth-first search visits maximizers in lex order, so the
    // first subset of a new best size is the lex-smallest witness
    std::function<void(std::size_t)> visit = [&](std::size_t next) {
        if (!have_best || current.size() > best) {
            best = current.size();
            best_witness = current;
            have_best = true;
        }
        if (next == n) return;
        if (current.size() + (n - next) <= best) return;
        // include
        if (rows.rank() < full) {
            const bool independent = rows.try_add(eval.row(next));
            if (!independent || rows.rank() < full) {
                current.push_back(next);
                visit(next + 1);
                current.pop_back();
            }
            if (independent) rows.pop();
        }
        // exclude
        if (current.size() + (n - next - 1) > best) visit(next + 1);
    };
    visit(0);
    return {best, best_witness};
}

/// Maximum number of collinear points, exact in any ambient dimension: for
/// each pair, count the points whose coordinate matrix with the pair stays
/// rank 2.
template <class K>
std::pair<std::size_t, std::vector<std::size_t>> collinear_max(
    const PointConfiguration<K>& sigma) {
    const std::size_t n = sigma.size();
    if (n <= 2) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return {n, all};
    }
    const std::size_t width = static_cast<std::size_t>(sigma.ambient_dim()) + 1;
    std::size_t best = 2;
    std::vector<std::size_t> best_witness = {0, 1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::size_t> on_line = {i, j};
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                Matrix<K> m(3, width);
                for (std::size_t c = 0; c < width; ++c) {
                    m.at(0, c) = sigma[i][c];
                    m.at(1, c) = sigma[j][c];
                    m.at(2, c) = sigma[k][c];
                }
                if (rank(std::move(m)) == 2) on_line.push_back(k);
            }
            std::sort(on_line.begin(), on_line.end());
            if (on_line.size() > best ||
                (on_line.size() == best && on_line < best_witness)) {
                best = on_line.size();
                best_witness = on_line;
            }
        }
    }
    return {best, best_witness};
}

/// One clause of the main-theorem hypothesis check: the cardinality bound or
/// a per-degree curve bound. Violations carry an exact witness; clauses
/// settled through a projection cannot be Violated, only Unknown.
template <class K>
struct HypothesisClause {
    std::string name;
    int k = 0; // 0 for the cardinality clause
    long bound = 0;
    std::optional<long> found;
    Status status = Status::Unknown;
    std::vector<std::size_t> witness;
    std::optional<Form<K>> witness_form;
};

template <class K>
struct HypothesisReport {
    int mu = 0;
    std::vector<HypothesisClause<K>> clauses;
    std::uint64_t seed = 0;
    int projection_attempts = 0;
    std::optional<std::uint64_t> projection_seed;

    bool fully_certified() const {
        for (const auto& c : clauses)
            if (c.status != Status::Certified) return false;
        return true;
    }
    Status overall() const {
        bool unknown = false;
        for (const auto& c : clauses) {
            if (c.status == Status::Violated) return Status::Violated;
            if (c.status == Status::Unknown) unknown = true;
        }
        return unknown ? Status::Unknown : Status::Certified;
    }
};

struct CertifyOptions {
    std::uint64_t seed = 0;
    int projection_retries = 8;
    std::size_t subset_cap = default_subset_cap;
};

namespace detail {

template <class K>
HypothesisClause<K> plane_curve_clause(const PointConfiguration<K>& plane, int k,
                                       long bound, std::size_t cap) {
    HypothesisClause<K> clause;
    clause.name = "curve-degree-" + std::to_string(k);
    clause.k = k;
    clause.bound = bound;
    auto [found, witness] = max_on_plane_curve(plane, k, cap);
    clause.found = static_cast<long>(found);
    if (static_cast<long>(found) <= bound) {
        clause.status = Status::Certified;
    } else {
        clause.status = Status::Violated;
        clause.witness = witness;
        const auto sys = vanishing_system(plane.subset(witness), k);
        if (!sys.empty()) clause.witness_form = sys.front();
    }
    return clause;
}

} // namespace detail

/// Checks the hypotheses of the main theorem for a configuration and mu:
/// |Sigma| <= mu^2 - 1, and at most mu*k points on a curve of degree k for
/// k = 1..mu-1. Cardinality and collinearity are exact in any ambient
/// dimension; higher-degree curve bounds are exact in the plane and are
/// otherwise certified through a validated general projection (a degree-k
/// space curve projects to a plane curve of degree at most k, so plane
/// bounds that hold for every j <= k certify the space bound; a projected
/// violation may be an artifact, so it downgrades to Unknown after the
/// resampling budget).
template <class K>
HypothesisReport<K> certify_theorem_hypotheses(const PointConfiguration<K>& sigma, int mu,
                                               const CertifyOptions& options = {},
                                               const FieldSpec<K>& spec = {}) {
    if (mu < 2) throw ConfigError("the theorem requires mu >= 2");
    if (sigma.ambient_dim() < 2)
        throw WrongAmbientDimension("configuration must live in P^2 or higher");

    HypothesisReport<K> report;
    report.mu = mu;
    report.seed = options.seed;

    HypothesisClause<K> card;
    card.name = "cardinality";
    card.bound = static_cast<long>(mu) * mu - 1;
    card.found = static_cast<long>(sigma.size());
    card.status = (*card.found <= card.bound) ? Status::Certified : Status::Violated;
    report.clauses.push_back(std::move(card));

    HypothesisClause<K> lines;
    lines.name = "curve-degree-1";
    lines.k = 1;
    lines.bound = mu;
    auto [line_max, line_witness] = collinear_max(sigma);
    lines.found = static_cast<long>(line_max);
    if (*lines.found <= lines.bound) {
        lines.status = Status::Certified;
    } else {
        lines.status = Status::Violated;
        lines.witness = line_witness;
    }
    report.clauses.push_back(std::move(lines));

    if (mu == 2) return report;

    if (sigma.ambient_dim() == 2) {
        for (int k = 2; k < mu; ++k)
            report.clauses.push_back(detail::plane_curve_clause(
                sigma, k, static_cast<long>(mu) * k, options.subset_cap));
        return report;
    }

    // ambient >= 3: certify through projections, resampling on failure
    std::vector<long> plane_max(static_cast<std::size_t>(mu), 0);
    bool bounds_hold = false;
    int attempts = 0;
    std::optional<std::uint64_t> used_seed;
    for (int attempt = 0; attempt <= options.projection_retries && !bounds_hold; ++attempt) {
        const std::uint64_t draw_seed = derive_seed(options.seed, static_cast<std::uint64_t>(attempt));
        const auto map = random_projection<K>(sigma.ambient_dim(), 2, draw_seed, spec);
        ProjectedConfig<K> projected{PointConfiguration<K>(2), map, {}};
        try {
            projected = project_config(map, sigma, options.projection_retries, spec);
        } catch (const GenericityFailure&) {
            if (attempt == options.projection_retries && attempts == 0) throw;
            continue;
        }
        ++attempts;
        used_seed = projected.map.seed;
        bounds_hold = true;
        for (int j = 1; j < mu; ++j) {
            const auto [found, witness] =
                j == 1 ? collinear_max(projected.points)
                       : max_on_plane_curve(projected.points, j, options.subset_cap);
            plane_max[static_cast<std::size_t>(j)] = static_cast<long>(found);
            if (static_cast<long>(found) > static_cast<long>(mu) * j) bounds_hold = false;
        }
    }
    report.projection_attempts = attempts;
    report.projection_seed = used_seed;
    for (int k = 2; k < mu; ++k) {
        HypothesisClause<K> clause;
        clause.name = "curve-degree-" + std::to_string(k);
        clause.k = k;
        clause.bound = static_cast<long>(mu) * k;
        bool ok = true;
        for (int j = 1; j <= k; ++j)
            if (plane_max[static_cast<std::size_t>(j)] > static_cast<long>(mu) * j) ok = false;
        clause.found = plane_max[static_cast<std::size_t>(k)];
        clause.status = ok ? Status::Certified : Status::Unknown;
        report.clauses.push_back(std::move(clause));
    }
    return report;
}

} // namespace cbkit
