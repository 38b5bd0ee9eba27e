#pragma once

#include <optional>
#include <vector>

#include "cbkit/point.hpp"

namespace cbkit {

/// Outcome of the independent-conditions test at one degree. defect == 0
/// means the configuration imposes independent linear conditions; a forced
/// point is one every degree-m form through the others must also contain.
struct ConditionsReport {
    std::size_t config_size = 0;
    int degree = 0;
    std::size_t rank = 0;
    std::size_t defect = 0;
    std::vector<std::size_t> forced_points;
};

template <class K>
std::size_t conditions_rank(const PointConfiguration<K>& sigma, int degree) {
    if (degree < 0) throw ConfigError("degree must be >= 0");
    return rank(evaluation_matrix(sigma, degree));
}

template <class K>
std::size_t conditions_defect(const PointConfiguration<K>& sigma, int degree) {
    return sigma.size() - conditions_rank(sigma, degree);
}

/// Indices whose evaluation functional lies in the span of the others:
/// deleting the point does not drop the rank.
template <class K>
std::vector<std::size_t> forced_points(const PointConfiguration<K>& sigma, int degree) {
    std::vector<std::size_t> forced;
    if (sigma.empty()) return forced;
    const MonomialBasis basis = monomial_basis(sigma.ambient_dim() + 1, degree);
    const std::size_t full = rank(evaluation_matrix(sigma, degree, basis));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const auto deleted = sigma.without_point(i);
        if (rank(evaluation_matrix(deleted, degree, basis)) == full)
            forced.push_back(i);
    }
    return forced;
}

template <class K>
ConditionsReport conditions_report(const PointConfiguration<K>& sigma, int degree) {
    ConditionsReport r;
    r.config_size = sigma.size();
    r.degree = degree;
    r.rank = conditions_rank(sigma, degree);
    r.defect = sigma.size() - r.rank;
    r.forced_points = forced_points(sigma, degree);
    return r;
}

/// A degree-m form vanishing on Sigma minus the chosen point and not at the
/// point itself, when one exists (exactly when the point is not forced).
/// The coefficient vector is the first canonical kernel element of the
/// deleted system, in graded-lex column order, that is nonzero at the point.
template <class K>
std::optional<Form<K>> separating_form(const PointConfiguration<K>& sigma,
                                       std::size_t p_index, int degree) {
    if (p_index >= sigma.size())
        throw IndexOutOfRange("no point at index " + std::to_string(p_index));
    const MonomialBasis basis = monomial_basis(sigma.ambient_dim() + 1, degree);
    const auto deleted = sigma.without_point(p_index);
    const K one = one_like(sigma[p_index][0]);
    const auto kernel = kernel_basis(evaluation_matrix(deleted, degree, basis), one);
    const auto& point = sigma[p_index];
    for (const auto& coeffs : kernel) {
        K value = zero_like(one);
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!is_zero(coeffs[j]))
                value = value + coeffs[j] * evaluate_monomial(basis.monomials[j], point, one);
        if (is_zero(value)) continue;
        Form<K> f(basis.num_vars, degree);
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!is_zero(coeffs[j])) f.set_coeff(basis.monomials[j], coeffs[j]);
        return f;
    }
    return std::nullopt;
}

} // namespace cbkit
