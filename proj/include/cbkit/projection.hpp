#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbkit/point.hpp"
#include "cbkit/rng.hpp"

namespace cbkit {

/// Linear projection P^n -> P^m given by a full-rank (m+1) x (n+1) matrix.
/// The seed records how the matrix was drawn.
template <class K>
struct ProjectionMap {
    Matrix<K> matrix;
    std::uint64_t seed = 0;

    int domain_dim() const { return static_cast<int>(matrix.cols()) - 1; }
    int target_dim() const { return static_cast<int>(matrix.rows()) - 1; }

    /// Image of a point; empty when the point lies in the center.
    std::optional<ProjectivePoint<K>> apply(const ProjectivePoint<K>& p) const {
        if (p.ambient_dim() != domain_dim())
            throw DimensionMismatch("projection domain mismatch");
        std::vector<K> out;
        out.reserve(matrix.rows());
        bool all_zero = true;
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            K acc = zero_like(p[0]);
            for (std::size_t c = 0; c < matrix.cols(); ++c)
                acc = acc + matrix.at(r, c) * p[c];
            if (!is_zero(acc)) all_zero = false;
            out.push_back(acc);
        }
        if (all_zero) return std::nullopt;
        return ProjectivePoint<K>(std::move(out));
    }
};

namespace detail {

// qq draws use a modest integer box; fp draws cover the whole field
inline Rational draw_entry(SplitMix64& g, const FieldSpec<Rational>& spec) {
    return spec.from_int(g.range(-10000, 10000));
}
inline Fp draw_entry(SplitMix64& g, const FieldSpec<Fp>& spec) {
    return spec.from_int(static_cast<std::int64_t>(g.below(spec.p)));
}

} // namespace detail

/// Seeded draw of a projection matrix; rank-deficient draws are rejected and
/// redrawn, so the same seed always yields the same map.
template <class K>
ProjectionMap<K> random_projection(int n, int m, std::uint64_t seed,
                                   const FieldSpec<K>& spec = {}) {
    if (!(n > m && m >= 2))
        throw WrongAmbientDimension("projection needs n > m >= 2");
    constexpr int max_draws = 64;
    SplitMix64 g(derive_seed(seed, 0x70726f6au));
    for (int attempt = 0; attempt < max_draws; ++attempt) {
        Matrix<K> mat(static_cast<std::size_t>(m) + 1, static_cast<std::size_t>(n) + 1);
        for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c)
                mat.at(r, c) = detail::draw_entry(g, spec);
        if (rank(mat) == static_cast<std::size_t>(m) + 1)
            return ProjectionMap<K>{std::move(mat), seed};
    }
    throw RetriesExhausted("could not draw a full-rank projection");
}

struct GenericityReport {
    struct Rejection {
        std::uint64_t seed;
        std::string predicate;
    };
    std::vector<Rejection> rejections;
    std::uint64_t final_seed = 0;
    int attempts = 0;
};

template <class K>
struct ProjectedConfig {
    PointConfiguration<K> points;
    ProjectionMap<K> map;
    GenericityReport report;
};

template <class K>
std::pair<std::size_t, std::vector<std::size_t>> collinear_max(const PointConfiguration<K>&);

namespace detail {

/// One validation pass: no point in the center, injective on the
/// configuration, and no new collinearities.
template <class K>
std::optional<std::string> validate_projection(const ProjectionMap<K>& map,
                                               const PointConfiguration<K>& sigma,
                                               std::size_t collinear_before,
                                               PointConfiguration<K>& out) {
    std::vector<ProjectivePoint<K>> images;
    images.reserve(sigma.size());
    for (const auto& p : sigma) {
        auto img = map.apply(p);
        if (!img) return "point in center";
        images.push_back(std::move(*img));
    }
    if (images.empty()) {
        out = PointConfiguration<K>(map.target_dim());
        return std::nullopt;
    }
    try {
        out = PointConfiguration<K>(std::move(images));
    } catch (const DuplicatePoint&) {
        return "not injective on configuration";
    }
    if (!sigma.empty() && collinear_max(out).first != collinear_before)
        return "collinearity not preserved";
    return std::nullopt;
}

} // namespace detail

/// Validated general projection: applies the map, checks the genericity
/// predicates, and redraws with derived seeds until one passes or the retry
/// budget is spent. Deterministic in (map.seed, retries, sigma).
template <class K>
ProjectedConfig<K> project_config(const ProjectionMap<K>& initial,
                                  const PointConfiguration<K>& sigma, int retries,
                                  const FieldSpec<K>& spec = {}) {
    if (initial.domain_dim() != sigma.ambient_dim())
        throw DimensionMismatch("projection domain does not match configuration");
    GenericityReport report;
    const std::size_t collinear_before = sigma.empty() ? 0 : collinear_max(sigma).first;
    ProjectionMap<K> map = initial;
    for (int attempt = 0; attempt <= retries; ++attempt) {
        report.attempts = attempt + 1;
        PointConfiguration<K> projected(initial.target_dim());
        auto failure = detail::validate_projection(map, sigma, collinear_before, projected);
        if (!failure) {
            report.final_seed = map.seed;
            return ProjectedConfig<K>{std::move(projected), std::move(map), std::move(report)};
        }
        report.rejections.push_back({map.seed, *failure});
        if (attempt < retries) {
            const std::uint64_t next = derive_seed(initial.seed, static_cast<std::uint64_t>(attempt) + 1);
            map = random_projection<K>(initial.domain_dim(), initial.target_dim(), next, spec);
        }
    }
    std::string what = "no valid projection after " + std::to_string(retries + 1) + " draws:";
    for (const auto& r : report.rejections) what += " [" + r.predicate + "]";
    throw GenericityFailure(what);
}

} // namespace cbkit
