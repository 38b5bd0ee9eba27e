#pragma once

// Test-only oracles, kept independent of the production elimination paths:
// rank by textbook Gaussian elimination directly over the field, and the
// plane-curve maximum by full subset enumeration.

#include <utility>
#include <vector>

#include "cbkit/curves.hpp"
#include "cbkit/matrix.hpp"
#include "cbkit/point.hpp"

namespace cbkit::testing {

template <class K>
std::size_t naive_rank(Matrix<K> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!is_zero(m.at(i, c))) {
                piv = i;
                break;
            }
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            const K f = m.at(i, c) / m.at(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

template <class K>
std::size_t naive_defect(const PointConfiguration<K>& sigma, int degree) {
    return sigma.size() - naive_rank(evaluation_matrix(sigma, degree));
}

/// Full 2^n subset enumeration with the same tie-break contract as the
/// production search: maximum size, then lexicographically smallest indices.
template <class K>
std::pair<std::size_t, std::vector<std::size_t>> naive_max_on_plane_curve(
    const PointConfiguration<K>& sigma, int k) {
    const std::size_t n = sigma.size();
    const std::size_t full = binomial(static_cast<unsigned>(k) + 2, 2);
    std::size_t best = 0;
    std::vector<std::size_t> best_witness;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) indices.push_back(i);
        const auto sub = sigma.subset(indices);
        const std::size_t r = sub.empty() ? 0 : naive_rank(evaluation_matrix(sub, k));
        if (r >= full) continue; // no nonzero degree-k form through the subset
        const bool better = indices.size() > best ||
                            (indices.size() == best && indices < best_witness);
        if (better) {
            best = indices.size();
            best_witness = indices;
        }
    }
    return {best, best_witness};
}

} // namespace cbkit::testing
