#pragma once

#include <cstdint>
#include <vector>

namespace cbkit {

using Exponents = std::vector<int>;

/// All exponent tuples in `num_vars` variables of total degree exactly
/// `degree`, ordered graded-lexicographically (within the fixed degree this
/// is lex, leading variable first: x^m comes first, last^m comes last).
struct MonomialBasis {
    int num_vars = 0;
    int degree = 0;
    std::vector<Exponents> monomials;

    std::size_t size() const { return monomials.size(); }
};

MonomialBasis monomial_basis(int num_vars, int degree);

std::uint64_t binomial(unsigned n, unsigned k);

} // namespace cbkit
