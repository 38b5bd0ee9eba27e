#include "cbkit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cbkit {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

Integer parse_integer(const std::string& token, std::size_t line) {
    if (token.empty()) throw ParseError(line, "empty number");
    std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (i == token.size()) throw ParseError(line, "sign without digits: '" + token + "'");
    for (; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw ParseError(line, "not an integer: '" + token + "'");
    return Integer(token);
}

/// `key=value` tokens of a header line.
std::string header_value(const std::vector<std::string>& toks, const std::string& key,
                         std::size_t line) {
    const std::string prefix = key + "=";
    for (const auto& t : toks)
        if (t.rfind(prefix, 0) == 0) return t.substr(prefix.size());
    throw ParseError(line, "missing header field '" + key + "'");
}

int parse_small_int(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "not an integer: '" + s + "'");
    }
}

} // namespace

Rational parse_rational(const std::string& token, std::size_t line) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(token, line));
    const Integer num = parse_integer(token.substr(0, slash), line);
    const Integer den = parse_integer(token.substr(slash + 1), line);
    if (den == 0) throw ParseError(line, "zero denominator in '" + token + "'");
    return Rational(num) / Rational(den);
}

PointSetDocument parse_pointset(std::istream& in) {
    PointSetDocument doc;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        const auto toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() < 4 || toks[0] != "pointset" || toks[1] != "v1")
                throw ParseError(lineno, "expected header 'pointset v1 dim=<n> field=<f>'");
            doc.dim = parse_small_int(header_value(toks, "dim", lineno), lineno);
            if (doc.dim < 1) throw ParseError(lineno, "dim must be >= 1");
            const std::string field = header_value(toks, "field", lineno);
            if (field == "rational") {
                doc.field = {true, 0};
            } else if (field.rfind("prime:", 0) == 0) {
                const Integer p = parse_integer(field.substr(6), lineno);
                if (p < 2 || p > Integer(Fp::max_prime) || !is_prime(static_cast<std::uint64_t>(p)))
                    throw ParseError(lineno, "'" + field.substr(6) + "' is not a usable prime");
                doc.field = {false, static_cast<std::uint64_t>(p)};
            } else {
                throw ParseError(lineno, "field must be 'rational' or 'prime:p'");
            }
            width = static_cast<std::size_t>(doc.dim) + 1;
            have_header = true;
            continue;
        }
        if (toks.size() != width)
            throw ParseError(lineno, "expected " + std::to_string(width) +
                                         " coordinates, got " + std::to_string(toks.size()));
        std::vector<Rational> row;
        row.reserve(width);
        for (const auto& t : toks) row.push_back(parse_rational(t, lineno));
        doc.rows.push_back(std::move(row));
    }
    if (!have_header) throw ParseError(lineno + 1, "missing pointset header");
    return doc;
}

std::string serialize(const PointSetDocument& doc) {
    std::ostringstream out;
    out << "pointset v1 dim=" << doc.dim << " field=";
    if (doc.field.is_rational)
        out << "rational";
    else
        out << "prime:" << doc.field.prime;
    out << "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i].str();
        out << "\n";
    }
    return out.str();
}

PolynomialDocument parse_polynomial(std::istream& in) {
    PolynomialDocument doc;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        const auto toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() < 4 || toks[0] != "poly" || toks[1] != "v1")
                throw ParseError(lineno, "expected header 'poly v1 vars=<k> deg=<d>'");
            doc.vars = parse_small_int(header_value(toks, "vars", lineno), lineno);
            doc.degree = parse_small_int(header_value(toks, "deg", lineno), lineno);
            if (doc.vars < 1) throw ParseError(lineno, "vars must be >= 1");
            if (doc.degree < 0) throw ParseError(lineno, "deg must be >= 0");
            have_header = true;
            continue;
        }
        const std::size_t want = static_cast<std::size_t>(doc.vars) + 2;
        if (toks.size() != want || toks[doc.vars] != ":")
            throw ParseError(lineno, "expected '<e0> ... <ek> : <coeff>'");
        Exponents exps;
        int total = 0;
        for (int v = 0; v < doc.vars; ++v) {
            const int e = parse_small_int(toks[static_cast<std::size_t>(v)], lineno);
            if (e < 0) throw ParseError(lineno, "negative exponent");
            exps.push_back(e);
            total += e;
        }
        if (total != doc.degree)
            throw ParseError(lineno, "term of degree " + std::to_string(total) +
                                         " in a polynomial of degree " +
                                         std::to_string(doc.degree));
        const Rational c = parse_rational(toks.back(), lineno);
        if (is_zero(c)) throw ParseError(lineno, "zero coefficient");
        doc.terms.emplace_back(std::move(exps), c);
    }
    if (!have_header) throw ParseError(lineno + 1, "missing poly header");
    return doc;
}

std::string serialize(const PolynomialDocument& doc) {
    std::ostringstream out;
    out << "poly v1 vars=" << doc.vars << " deg=" << doc.degree << "\n";
    for (const auto& [exps, c] : doc.terms) {
        for (int e : exps) out << e << " ";
        out << ": " << c.str() << "\n";
    }
    return out.str();
}

LinesDocument parse_lines(std::istream& in) {
    LinesDocument doc;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        const auto toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() < 2 || toks[0] != "lines" || toks[1] != "v1")
                throw ParseError(lineno, "expected header 'lines v1'");
            have_header = true;
            continue;
        }
        if (toks.size() != 4 || (toks[0] != "L" && toks[0] != "M"))
            throw ParseError(lineno, "expected 'L a b c' or 'M a b c'");
        PlaneLine<Rational> coeffs = {parse_rational(toks[1], lineno),
                                      parse_rational(toks[2], lineno),
                                      parse_rational(toks[3], lineno)};
        if (toks[0] == "L")
            doc.l_lines.push_back(std::move(coeffs));
        else
            doc.m_lines.push_back(std::move(coeffs));
    }
    if (!have_header) throw ParseError(lineno + 1, "missing lines header");
    return doc;
}

std::string serialize(const LinesDocument& doc) {
    std::ostringstream out;
    out << "lines v1\n";
    for (const auto& l : doc.l_lines)
        out << "L " << l[0].str() << " " << l[1].str() << " " << l[2].str() << "\n";
    for (const auto& m : doc.m_lines)
        out << "M " << m[0].str() << " " << m[1].str() << " " << m[2].str() << "\n";
    return out.str();
}

namespace {

template <class Doc>
Doc parse_file_as(const std::string& path, Doc (*parser)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parser(in);
}

} // namespace

PointSetDocument parse_pointset_file(const std::string& path) {
    return parse_file_as<PointSetDocument>(path, parse_pointset);
}
PolynomialDocument parse_polynomial_file(const std::string& path) {
    return parse_file_as<PolynomialDocument>(path, parse_polynomial);
}
LinesDocument parse_lines_file(const std::string& path) {
    return parse_file_as<LinesDocument>(path, parse_lines);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
}

PointConfiguration<Rational> rational_config(const PointSetDocument& doc) {
    if (!doc.field.is_rational)
        throw ConfigError("document declares a prime field, not rational");
    std::vector<ProjectivePoint<Rational>> pts;
    pts.reserve(doc.rows.size());
    for (const auto& row : doc.rows) pts.emplace_back(row);
    if (pts.empty()) return PointConfiguration<Rational>(doc.dim);
    return PointConfiguration<Rational>(std::move(pts));
}

PointConfiguration<Fp> fp_config(const PointSetDocument& doc) {
    if (doc.field.is_rational)
        throw ConfigError("document declares the rational field, not a prime field");
    const std::uint64_t p = doc.field.prime;
    std::vector<ProjectivePoint<Fp>> pts;
    pts.reserve(doc.rows.size());
    for (const auto& row : doc.rows) {
        std::vector<Fp> coords;
        coords.reserve(row.size());
        for (const auto& c : row) coords.push_back(reduce_mod(c, p));
        pts.emplace_back(std::move(coords));
    }
    if (pts.empty()) return PointConfiguration<Fp>(doc.dim);
    return PointConfiguration<Fp>(std::move(pts));
}

Form<Rational> rational_form(const PolynomialDocument& doc) {
    Form<Rational> f(doc.vars, doc.degree);
    for (const auto& [exps, c] : doc.terms) f.add_to_coeff(exps, c);
    return f;
}

Form<Fp> fp_form(const PolynomialDocument& doc, std::uint64_t p) {
    if (!is_prime(p)) throw ConfigError("not a prime: " + std::to_string(p));
    Form<Fp> f(doc.vars, doc.degree);
    for (const auto& [exps, c] : doc.terms) f.add_to_coeff(exps, reduce_mod(c, p));
    return f;
}

PointSetDocument to_document(const PointConfiguration<Rational>& config) {
    PointSetDocument doc;
    doc.dim = config.ambient_dim();
    doc.field = {true, 0};
    for (const auto& p : config) doc.rows.push_back(p.coords());
    return doc;
}

PointSetDocument to_document(const PointConfiguration<Fp>& config) {
    PointSetDocument doc;
    doc.dim = config.ambient_dim();
    std::uint64_t p = config.empty() ? 2 : config[0][0].prime();
    doc.field = {false, p};
    for (const auto& pt : config) {
        std::vector<Rational> row;
        row.reserve(pt.coords().size());
        for (const auto& c : pt.coords()) row.emplace_back(c.value());
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

PolynomialDocument to_document(const Form<Rational>& form) {
    PolynomialDocument doc;
    doc.vars = form.num_vars();
    doc.degree = form.degree();
    for (const auto& [exps, c] : form.terms()) doc.terms.emplace_back(exps, c);
    return doc;
}

} // namespace cbkit
