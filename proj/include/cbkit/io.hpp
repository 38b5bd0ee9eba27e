#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cbkit/fields.hpp"
#include "cbkit/hypersurface.hpp"
#include "cbkit/point.hpp"

namespace cbkit {

struct FieldDescriptor {
    bool is_rational = true;
    std::uint64_t prime = 0;

    bool operator==(const FieldDescriptor&) const = default;
};

/// Text form: header `pointset v1 dim=<n> field=<rational|prime:p>`, then one
/// whitespace-separated coordinate tuple per line, fractions as a/b.
struct PointSetDocument {
    int dim = 0;
    FieldDescriptor field;
    std::vector<std::vector<Rational>> rows;

    bool operator==(const PointSetDocument&) const = default;
};

/// Text form: header `poly v1 vars=<k> deg=<d>`, then lines `e0 e1 ... ek : coeff`.
struct PolynomialDocument {
    int vars = 0;
    int degree = 0;
    std::vector<std::pair<Exponents, Rational>> terms;

    bool operator==(const PolynomialDocument&) const = default;
};

/// Text form: header `lines v1`, then `L a b c` / `M a b c` coefficient rows.
struct LinesDocument {
    std::vector<PlaneLine<Rational>> l_lines;
    std::vector<PlaneLine<Rational>> m_lines;

    bool operator==(const LinesDocument&) const = default;
};

Rational parse_rational(const std::string& token, std::size_t line);

PointSetDocument parse_pointset(std::istream& in);
PointSetDocument parse_pointset_file(const std::string& path);
std::string serialize(const PointSetDocument& doc);

PolynomialDocument parse_polynomial(std::istream& in);
PolynomialDocument parse_polynomial_file(const std::string& path);
std::string serialize(const PolynomialDocument& doc);

LinesDocument parse_lines(std::istream& in);
LinesDocument parse_lines_file(const std::string& path);
std::string serialize(const LinesDocument& doc);

void write_file(const std::string& path, const std::string& contents);

PointConfiguration<Rational> rational_config(const PointSetDocument& doc);
PointConfiguration<Fp> fp_config(const PointSetDocument& doc);

Form<Rational> rational_form(const PolynomialDocument& doc);
Form<Fp> fp_form(const PolynomialDocument& doc, std::uint64_t p);

PointSetDocument to_document(const PointConfiguration<Rational>& config);
PointSetDocument to_document(const PointConfiguration<Fp>& config);
PolynomialDocument to_document(const Form<Rational>& form);

} // namespace cbkit
