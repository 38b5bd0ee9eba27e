#include "cbkit/monomials.hpp"

#include "cbkit/errors.hpp"

namespace cbkit {

namespace {

void fill_monomials(int var, int remaining, Exponents& current,
                    std::vector<Exponents>& out) {
    const int num_vars = static_cast<int>(current.size());
    if (var == num_vars - 1) {
        current[var] = remaining;
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[var] = e;
        fill_monomials(var + 1, remaining - e, current, out);
    }
}

} // namespace

MonomialBasis monomial_basis(int num_vars, int degree) {
    if (num_vars < 1) throw ConfigError("monomial basis needs at least one variable");
    if (degree < 0) throw ConfigError("monomial basis needs degree >= 0");
    MonomialBasis basis;
    basis.num_vars = num_vars;
    basis.degree = degree;
    Exponents current(num_vars, 0);
    fill_monomials(0, degree, current, basis.monomials);
    return basis;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

} // namespace cbkit
