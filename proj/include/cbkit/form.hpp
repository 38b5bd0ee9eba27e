#pragma once

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cbkit/fields.hpp"
#include "cbkit/monomials.hpp"

namespace cbkit {

/// Sparse homogeneous polynomial: exponent tuple -> nonzero coefficient.
/// Every stored tuple sums to the declared degree; the zero form keeps an
/// empty term map. Terms iterate in a fixed deterministic order.
template <class K>
class Form {
public:
    using TermMap = std::map<Exponents, K>;

    Form() = default;
    Form(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
        if (num_vars < 1) throw ConfigError("form needs at least one variable");
        if (degree < 0) throw ConfigError("form needs degree >= 0");
    }

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void set_coeff(const Exponents& exps, const K& c) {
        check_exponents(exps);
        if (cbkit::is_zero(c))
            terms_.erase(exps);
        else
            terms_[exps] = c;
    }

    void add_to_coeff(const Exponents& exps, const K& c) {
        check_exponents(exps);
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            if (!cbkit::is_zero(c)) terms_.emplace(exps, c);
            return;
        }
        it->second = it->second + c;
        if (cbkit::is_zero(it->second)) terms_.erase(it);
    }

    K coeff(const Exponents& exps, const K& zero) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? zero : it->second;
    }

    K evaluate(std::span<const K> coords) const {
        if (static_cast<int>(coords.size()) != num_vars_)
            throw DimensionMismatch("form in " + std::to_string(num_vars_) +
                                    " variables evaluated on " +
                                    std::to_string(coords.size()) + " coordinates");
        K acc{};
        bool first = true;
        for (const auto& [exps, c] : terms_) {
            K term = c;
            for (int v = 0; v < num_vars_; ++v)
                if (exps[v] > 0)
                    term = term * field_pow(coords[v], static_cast<unsigned>(exps[v]));
            acc = first ? term : acc + term;
            first = false;
        }
        if (first) {
            // zero form: synthesize zero from the input coordinates
            return coords.empty() ? K{} : zero_like(coords[0]);
        }
        return acc;
    }

    Form partial(int var) const {
        if (var < 0 || var >= num_vars_)
            throw IndexOutOfRange("no variable " + std::to_string(var));
        Form out(num_vars_, degree_ > 0 ? degree_ - 1 : 0);
        for (const auto& [exps, c] : terms_) {
            if (exps[var] == 0) continue;
            Exponents e = exps;
            const int mult = e[var];
            e[var] -= 1;
            out.add_to_coeff(e, c * int_multiple(c, mult));
        }
        return out;
    }

    Form operator+(const Form& o) const {
        check_compatible(o, /*same_degree=*/true);
        Form out = *this;
        for (const auto& [exps, c] : o.terms_) out.add_to_coeff(exps, c);
        return out;
    }

    Form operator*(const Form& o) const {
        check_compatible(o, /*same_degree=*/false);
        Form out(num_vars_, degree_ + o.degree_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(num_vars_);
                for (int v = 0; v < num_vars_; ++v) e[v] = ea[v] + eb[v];
                out.add_to_coeff(e, ca * cb);
            }
        return out;
    }

    Form scaled(const K& s) const {
        Form out(num_vars_, degree_);
        if (cbkit::is_zero(s)) return out;
        for (const auto& [exps, c] : terms_) out.set_coeff(exps, c * s);
        return out;
    }

    bool operator==(const Form& o) const {
        return num_vars_ == o.num_vars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    // n copies of the one of c's field, without a FieldSpec at hand
    static K int_multiple(const K& exemplar, int n) {
        K one = one_like(exemplar);
        K acc = zero_like(exemplar);
        for (int i = 0; i < n; ++i) acc = acc + one;
        return acc;
    }

    void check_exponents(const Exponents& exps) const {
        if (static_cast<int>(exps.size()) != num_vars_)
            throw DimensionMismatch("exponent tuple has wrong arity");
        int total = 0;
        for (int e : exps) {
            if (e < 0) throw ConfigError("negative exponent");
            total += e;
        }
        if (total != degree_)
            throw DimensionMismatch("exponent tuple of degree " + std::to_string(total) +
                                    " in a form of degree " + std::to_string(degree_));
    }

    void check_compatible(const Form& o, bool same_degree) const {
        if (num_vars_ != o.num_vars_)
            throw DimensionMismatch("forms in different variable counts");
        if (same_degree && degree_ != o.degree_)
            throw DimensionMismatch("forms of different degrees");
    }

    int num_vars_ = 1;
    int degree_ = 0;
    TermMap terms_;
};

/// Linear form from a coefficient vector.
template <class K>
Form<K> linear_form(std::span<const K> coeffs) {
    Form<K> f(static_cast<int>(coeffs.size()), 1);
    for (std::size_t v = 0; v < coeffs.size(); ++v) {
        if (is_zero(coeffs[v])) continue;
        Exponents e(coeffs.size(), 0);
        e[v] = 1;
        f.set_coeff(e, coeffs[v]);
    }
    return f;
}

} // namespace cbkit
