#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cbkit/form.hpp"
#include "cbkit/matrix.hpp"
#include "cbkit/monomials.hpp"

namespace cbkit {

/// Point of P^n in canonical coordinates: not all zero, first nonzero
/// coordinate scaled to one. Equality is equality of the canonical tuples.
template <class K>
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<K> raw) : coords_(std::move(raw)) {
        if (coords_.empty()) throw AllZeroCoordinates("empty coordinate tuple");
        std::size_t lead = coords_.size();
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (!is_zero(coords_[i])) {
                lead = i;
                break;
            }
        }
        if (lead == coords_.size())
            throw AllZeroCoordinates("all coordinates are zero");
        const K inv = inverse(coords_[lead]);
        for (auto& c : coords_) c = c * inv;
    }

    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<K>& coords() const { return coords_; }
    const K& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const ProjectivePoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }
    bool operator<(const ProjectivePoint& o) const {
        return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                            o.coords_.begin(), o.coords_.end());
    }

private:
    std::vector<K> coords_;
};

template <class K>
ProjectivePoint<K> normalize_point(std::vector<K> raw) {
    return ProjectivePoint<K>(std::move(raw));
}

/// Ordered list of distinct points sharing one ambient dimension. Duplicates
/// are rejected, never merged.
template <class K>
class PointConfiguration {
public:
    explicit PointConfiguration(int ambient_dim) : ambient_dim_(ambient_dim) {
        if (ambient_dim_ < 1) throw WrongAmbientDimension("ambient dimension must be >= 1");
    }

    explicit PointConfiguration(std::vector<ProjectivePoint<K>> pts)
        : ambient_dim_(pts.empty() ? 1 : pts.front().ambient_dim()), pts_(std::move(pts)) {
        for (const auto& p : pts_)
            if (p.ambient_dim() != ambient_dim_)
                throw DimensionMismatch("points of mixed ambient dimension");
        std::set<std::vector<K>> seen;
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (!seen.insert(pts_[i].coords()).second)
                throw DuplicatePoint("duplicate point at index " + std::to_string(i));
    }

    int ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const ProjectivePoint<K>& operator[](std::size_t i) const { return pts_.at(i); }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    const std::vector<ProjectivePoint<K>>& points() const { return pts_; }

    PointConfiguration without_point(std::size_t index) const {
        if (index >= pts_.size())
            throw IndexOutOfRange("no point at index " + std::to_string(index));
        auto pts = pts_;
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(index));
        PointConfiguration out(ambient_dim_);
        out.pts_ = std::move(pts);
        return out;
    }

    PointConfiguration with_point(ProjectivePoint<K> p) const {
        if (p.ambient_dim() != ambient_dim_)
            throw DimensionMismatch("point of wrong ambient dimension");
        for (const auto& q : pts_)
            if (q == p) throw DuplicatePoint("point already present");
        PointConfiguration out = *this;
        out.pts_.push_back(std::move(p));
        return out;
    }

    PointConfiguration subset(std::span<const std::size_t> indices) const {
        PointConfiguration out(ambient_dim_);
        for (std::size_t i : indices) {
            if (i >= pts_.size())
                throw IndexOutOfRange("no point at index " + std::to_string(i));
            out.pts_.push_back(pts_[i]);
        }
        return out;
    }

private:
    int ambient_dim_;
    std::vector<ProjectivePoint<K>> pts_;
};

template <class K>
K evaluate_form(const Form<K>& f, const ProjectivePoint<K>& p) {
    if (f.num_vars() != p.ambient_dim() + 1)
        throw DimensionMismatch("form/point variable count mismatch");
    return f.evaluate(std::span<const K>(p.coords()));
}

template <class K>
K evaluate_monomial(const Exponents& exps, const ProjectivePoint<K>& p, const K& one) {
    K acc = one;
    for (std::size_t v = 0; v < exps.size(); ++v)
        if (exps[v] > 0)
            acc = acc * field_pow(p[v], static_cast<unsigned>(exps[v]));
    return acc;
}

/// The |Sigma| x binomial(m+n, n) matrix whose (i, j) entry is the j-th
/// graded-lex monomial of degree m at the canonical representative of point
/// i. Its rank counts the linear conditions the configuration imposes on
/// forms of degree m.
template <class K>
Matrix<K> evaluation_matrix(const PointConfiguration<K>& config, int degree,
                            const MonomialBasis& basis) {
    if (basis.num_vars != config.ambient_dim() + 1 || basis.degree != degree)
        throw DimensionMismatch("basis does not match configuration/degree");
    Matrix<K> m(config.size(), basis.size());
    if (config.empty()) return m;
    const K one = one_like(config[0][0]);
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            m.at(i, j) = evaluate_monomial(basis.monomials[j], config[i], one);
    return m;
}

template <class K>
Matrix<K> evaluation_matrix(const PointConfiguration<K>& config, int degree) {
    return evaluation_matrix(config, degree,
                             monomial_basis(config.ambient_dim() + 1, degree));
}

} // namespace cbkit
