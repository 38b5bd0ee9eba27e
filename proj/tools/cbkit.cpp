#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbkit/cbkit.hpp"

using json = nlohmann::json;

namespace {

// exit codes, stable across subcommands:
//   0 positive result, 10 negative result (dependent conditions, violated
//   hypotheses, not factorial, not base point free), 20 inconclusive,
//   70 theorem violation, 2 parse error, 3 invariant violation, 4 budget or
//   search cap exceeded, 1 anything else
constexpr int exit_ok = 0;
constexpr int exit_negative = 10;
constexpr int exit_unknown = 20;
constexpr int exit_theorem_violation = 70;
constexpr int exit_parse = 2;
constexpr int exit_invariant = 3;
constexpr int exit_budget = 4;
constexpr int exit_other = 1;

constexpr int schema_version = 1;

/// Line-delimited structured records; values keep insertion order in both
/// text and json modes so outputs diff cleanly.
class Emitter {
public:
    explicit Emitter(bool as_json) : as_json_(as_json) {}

    void emit(const std::string& kind,
              const std::vector<std::pair<std::string, json>>& fields) {
        if (as_json_) {
            json rec;
            rec["record"] = kind;
            rec["schema"] = schema_version;
            for (const auto& [k, v] : fields) rec[k] = v;
            std::cout << rec.dump() << "\n";
            return;
        }
        std::cout << "record=" << kind << " schema=" << schema_version;
        for (const auto& [k, v] : fields) std::cout << " " << k << "=" << text_of(v);
        std::cout << "\n";
    }

private:
    static std::string text_of(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ",";
                out += text_of(v[i]);
            }
            return out.empty() ? "-" : out;
        }
        return v.dump();
    }

    bool as_json_;
};

json indices_json(const std::vector<std::size_t>& idx) {
    json a = json::array();
    for (auto i : idx) a.push_back(i);
    return a;
}

std::uint64_t budget_from_env() {
    if (const char* env = std::getenv("CBKIT_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw cbkit::ConfigError("CBKIT_BUDGET is not a number");
        }
    }
    return cbkit::default_scan_budget;
}

template <class K>
void emit_conditions(Emitter& out, const cbkit::ConditionsReport& r) {
    out.emit("defect", {
        {"size", r.config_size},
        {"degree", r.degree},
        {"rank", r.rank},
        {"defect", r.defect},
        {"independent", r.defect == 0},
        {"forced", indices_json(r.forced_points)},
    });
}

template <class K>
void emit_hypotheses(Emitter& out, const cbkit::HypothesisReport<K>& report) {
    for (const auto& c : report.clauses) {
        std::vector<std::pair<std::string, json>> fields = {
            {"clause", c.name},
            {"bound", c.bound},
            {"status", cbkit::to_string(c.status)},
        };
        if (c.found) fields.emplace_back("found", *c.found);
        if (!c.witness.empty()) fields.emplace_back("witness", indices_json(c.witness));
        out.emit("hypothesis-clause", fields);
    }
    out.emit("hypothesis-report", {
        {"mu", report.mu},
        {"status", cbkit::to_string(report.overall())},
        {"seed", report.seed},
        {"projection_attempts", report.projection_attempts},
    });
}

struct CommonFlags {
    std::string output = "text";
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    std::size_t max_subset = cbkit::default_subset_cap;
    int retries = 8;
};

int run_defect(const std::string& points_path, int degree, const CommonFlags& flags) {
    Emitter out(flags.output == "json");
    const auto doc = cbkit::parse_pointset_file(points_path);
    cbkit::ConditionsReport report;
    if (doc.field.is_rational)
        report = cbkit::conditions_report(cbkit::rational_config(doc), degree);
    else
        report = cbkit::conditions_report(cbkit::fp_config(doc), degree);
    emit_conditions<cbkit::Rational>(out, report);
    return report.defect == 0 ? exit_ok : exit_negative;
}

template <class K>
int certify_impl(Emitter& out, const cbkit::PointConfiguration<K>& sigma, int mu,
                 const CommonFlags& flags, const cbkit::FieldSpec<K>& spec) {
    cbkit::CertifyOptions options;
    options.seed = flags.seed;
    options.projection_retries = flags.retries;
    options.subset_cap = flags.max_subset;
    const auto report = cbkit::certify_theorem_hypotheses(sigma, mu, options, spec);
    emit_hypotheses(out, report);
    const std::size_t defect = cbkit::conditions_defect(sigma, 2 * mu - 3);
    const bool certified = report.fully_certified();
    const bool violation = certified && defect != 0;
    out.emit("conclusion", {
        {"degree", 2 * mu - 3},
        {"defect", defect},
        {"theorem_violation", violation},
    });
    if (violation) return exit_theorem_violation;
    switch (report.overall()) {
        case cbkit::Status::Certified: return exit_ok;
        case cbkit::Status::Violated: return exit_negative;
        default: return exit_unknown;
    }
}

int run_certify(const std::string& points_path, int mu, const CommonFlags& flags) {
    Emitter out(flags.output == "json");
    const auto doc = cbkit::parse_pointset_file(points_path);
    if (doc.field.is_rational)
        return certify_impl<cbkit::Rational>(out, cbkit::rational_config(doc), mu, flags, {});
    return certify_impl<cbkit::Fp>(out, cbkit::fp_config(doc), mu, flags,
                                   cbkit::FieldSpec<cbkit::Fp>{doc.field.prime});
}

template <class K>
int emit_verdict(Emitter& out, const cbkit::FactorialityVerdict<K>& v, int d) {
    if (v.hypothesis_report) emit_hypotheses(out, *v.hypothesis_report);
    out.emit("factoriality", {
        {"degree", d},
        {"conditions_degree", 2 * d - 5},
        {"status", cbkit::to_string(v.status)},
        {"defect", v.defect},
        {"census_complete", v.census_complete},
        {"census_all_nodes", v.census_all_nodes},
        {"theorem_violation", v.theorem_violation},
    });
    if (v.theorem_violation) return exit_theorem_violation;
    return v.status == cbkit::Factoriality::NonFactorial ? exit_negative : exit_ok;
}

template <class K>
int factoriality_of_census(Emitter& out, const cbkit::SingularityCensus<K>& census, int d,
                           const std::string& mode, const CommonFlags& flags,
                           const cbkit::FieldSpec<K>& spec) {
    if (mode == "defect") return emit_verdict(out, cbkit::factoriality_verdict(census, d), d);
    cbkit::CertifyOptions options;
    options.seed = flags.seed;
    options.projection_retries = flags.retries;
    options.subset_cap = flags.max_subset;
    return emit_verdict(out, cbkit::cheltsov_certify(census, d, options, spec), d);
}

int run_factoriality(const std::string& poly_path, const std::string& census_path, int d,
                     const std::string& mode, const CommonFlags& flags) {
    Emitter out(flags.output == "json");
    if (poly_path.empty() == census_path.empty())
        throw cbkit::ConfigError("exactly one of --poly and --census is required");

    if (!poly_path.empty()) {
        if (flags.prime == 0)
            throw cbkit::ConfigError("--prime is required with --poly (census by F_p scan)");
        const auto doc = cbkit::parse_polynomial_file(poly_path);
        const cbkit::HypersurfaceSpec<cbkit::Rational> x(cbkit::rational_form(doc));
        if (d == 0) d = x.degree();
        if (d != x.degree())
            throw cbkit::ConfigError("--degree disagrees with the polynomial");
        const auto census = cbkit::singular_points_enumerate(x, flags.prime, budget_from_env());
        out.emit("census", {
            {"prime", flags.prime},
            {"size", census.points.size()},
            {"complete", census.complete},
            {"all_nodes", census.all_nodes()},
        });
        return factoriality_of_census(out, census, d, mode, flags,
                                      cbkit::FieldSpec<cbkit::Fp>{flags.prime});
    }

    if (d < 3) throw cbkit::ConfigError("--degree >= 3 is required with --census");
    const auto doc = cbkit::parse_pointset_file(census_path);
    if (doc.field.is_rational) {
        const auto points = cbkit::rational_config(doc);
        cbkit::SingularityCensus<cbkit::Rational> census{
            points, std::vector<bool>(points.size(), true), false};
        return factoriality_of_census(out, census, d, mode, flags, {});
    }
    const auto points = cbkit::fp_config(doc);
    cbkit::SingularityCensus<cbkit::Fp> census{
        points, std::vector<bool>(points.size(), true), false};
    return factoriality_of_census(out, census, d, mode, flags,
                                  cbkit::FieldSpec<cbkit::Fp>{doc.field.prime});
}

int run_gen_example(int d, const std::string& lines_path, const std::string& prefix,
                    const CommonFlags& flags) {
    Emitter out(flags.output == "json");
    std::vector<cbkit::PlaneLine<cbkit::Rational>> l_lines, m_lines;
    if (!lines_path.empty()) {
        const auto doc = cbkit::parse_lines_file(lines_path);
        l_lines = doc.l_lines;
        m_lines = doc.m_lines;
    } else {
        std::tie(l_lines, m_lines) = cbkit::random_example_lines(d, flags.seed, flags.retries);
    }
    const auto [x, census] = cbkit::generate_example<cbkit::Rational>(d, l_lines, m_lines);

    const std::string poly_path = prefix + ".poly";
    const std::string points_path = prefix + ".points";
    cbkit::write_file(poly_path, cbkit::serialize(cbkit::to_document(x.f)));
    cbkit::write_file(points_path, cbkit::serialize(cbkit::to_document(census.points)));

    out.emit("example", {
        {"degree", d},
        {"seed", flags.seed},
        {"census_size", census.points.size()},
        {"all_nodes", census.all_nodes()},
        {"poly_file", poly_path},
        {"census_file", points_path},
    });
    return exit_ok;
}

int run_bese(const std::string& points_path, int xi, const CommonFlags& flags) {
    Emitter out(flags.output == "json");
    const auto doc = cbkit::parse_pointset_file(points_path);
    cbkit::PointConfiguration<cbkit::Fp> points(2);
    if (doc.field.is_rational) {
        if (flags.prime == 0)
            throw cbkit::ConfigError(
                "rational point set: pass --prime to reduce for the F_p scan");
        auto reduced = doc;
        reduced.field = {false, flags.prime};
        points = cbkit::fp_config(reduced);
    } else {
        points = cbkit::fp_config(doc);
    }
    const auto report =
        cbkit::base_point_free_check(points, xi, flags.max_subset, budget_from_env());
    for (const auto& c : report.hypotheses.clauses) {
        std::vector<std::pair<std::string, json>> fields = {
            {"clause", c.name},
            {"bound", c.bound},
            {"found", c.found},
            {"ok", c.ok},
        };
        if (!c.witness.empty()) fields.emplace_back("witness", indices_json(c.witness));
        out.emit("bese-clause", fields);
    }
    json extra = json::array();
    for (const auto& q : report.extra_base_points) {
        std::string s;
        for (std::size_t i = 0; i < q.coords().size(); ++i)
            s += (i ? ":" : "") + std::to_string(q[i].value());
        extra.push_back(s);
    }
    out.emit("bese-report", {
        {"xi", report.xi},
        {"delta", report.delta},
        {"prime", report.prime},
        {"hypotheses_ok", report.hypotheses.all_ok()},
        {"system_dim", report.system_dim},
        {"extra_base_points", extra},
        {"tangent_deficient", indices_json(report.tangent_deficient_points)},
        {"base_point_free", report.base_point_free()},
        {"field_relative", true},
    });
    return report.base_point_free() ? exit_ok : exit_negative;
}

cbkit::CampaignConfig campaign_config_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cbkit::Error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw cbkit::ParseError(1, std::string("bad campaign config: ") + e.what());
    }
    cbkit::CampaignConfig config;
    try {
        config.trials = j.at("trials").get<int>();
        config.mu_min = j.at("mu_min").get<int>();
        config.mu_max = j.at("mu_max").get<int>();
        config.ambient_dim = j.at("ambient_dim").get<int>();
        config.prime = j.at("prime").get<std::uint64_t>();
        config.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("max_subset")) config.subset_cap = j["max_subset"].get<std::size_t>();
        if (j.contains("retries")) config.retries = j["retries"].get<int>();
    } catch (const json::exception& e) {
        throw cbkit::ParseError(1, std::string("bad campaign config: ") + e.what());
    }
    config.validate();
    return config;
}

int run_campaign(const std::string& config_path, const CommonFlags& flags) {
    Emitter out(flags.output == "json");
    const auto config = campaign_config_from_json(config_path);
    const auto summary = cbkit::run_campaign(config);
    for (const auto& t : summary.log)
        out.emit("campaign-trial", {
            {"trial", t.index},
            {"mu", t.mu},
            {"size", t.size},
            {"hypotheses", cbkit::to_string(t.hypothesis_status)},
            {"defect", t.defect},
            {"violation", t.violation},
        });
    out.emit("campaign-summary", {
        {"trials", summary.trials},
        {"certified", summary.certified},
        {"violated_hypotheses", summary.violated_hypotheses},
        {"unknown", summary.unknown},
        {"violations", summary.violations},
        {"seed", config.seed},
    });
    return summary.violations == 0 ? exit_ok : exit_theorem_violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cayley-Bacharach conditions, hypothesis certification, "
                 "and factoriality of nodal hypersurfaces in P^4"};
    app.require_subcommand(1);

    CommonFlags flags;
    app.add_option("--output", flags.output, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string points_path, poly_path, census_path, lines_path, prefix, config_path, mode = "certify";
    int degree = 0, mu = 0, d = 0, xi = 0;

    auto* cmd_defect = app.add_subcommand("defect", "rank/defect of the conditions a point set imposes");
    cmd_defect->add_option("points", points_path, "point set document")->required();
    cmd_defect->add_option("-m,--degree", degree, "form degree")->required();

    auto* cmd_certify = app.add_subcommand("certify", "certify the main theorem's hypotheses and conclusion");
    cmd_certify->add_option("points", points_path, "point set document")->required();
    cmd_certify->add_option("--mu", mu, "mu parameter (>= 2)")->required();
    cmd_certify->add_option("--seed", flags.seed, "projection seed");
    cmd_certify->add_option("--retries", flags.retries, "projection retry limit");
    cmd_certify->add_option("--max-subset", flags.max_subset, "subset search cap");

    auto* cmd_fact = app.add_subcommand("factoriality", "factoriality verdict for a nodal hypersurface in P^4");
    cmd_fact->add_option("--poly", poly_path, "polynomial document (enumerates Sing over F_p)");
    cmd_fact->add_option("--census", census_path, "point set document with the known singular points");
    cmd_fact->add_option("-d,--degree", d, "hypersurface degree");
    cmd_fact->add_option("--mode", mode, "certify (Cheltsov route) or defect only")
        ->check(CLI::IsMember({"certify", "defect"}));
    cmd_fact->add_option("--prime", flags.prime, "prime for the enumeration scan");
    cmd_fact->add_option("--seed", flags.seed, "projection seed");
    cmd_fact->add_option("--retries", flags.retries, "projection retry limit");
    cmd_fact->add_option("--max-subset", flags.max_subset, "subset search cap");

    auto* cmd_gen = app.add_subcommand("gen-example", "emit the boundary example x*prod(L) + y*prod(M)");
    cmd_gen->add_option("-d,--degree", d, "hypersurface degree (>= 3)")->required();
    cmd_gen->add_option("--seed", flags.seed, "line draw seed");
    cmd_gen->add_option("--lines", lines_path, "explicit lines document instead of a random draw");
    cmd_gen->add_option("--prefix", prefix, "output path prefix")->required();
    cmd_gen->add_option("--retries", flags.retries, "redraw limit");

    auto* cmd_bese = app.add_subcommand("bese-check", "plane base-point-freeness check over F_p");
    cmd_bese->add_option("points", points_path, "point set document")->required();
    cmd_bese->add_option("--xi", xi, "system degree (>= 3)")->required();
    cmd_bese->add_option("--prime", flags.prime, "prime when the document is rational");
    cmd_bese->add_option("--max-subset", flags.max_subset, "subset search cap");

    auto* cmd_campaign = app.add_subcommand("campaign", "seeded random certification campaign");
    cmd_campaign->add_option("config", config_path, "campaign config (json)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_defect->parsed()) return run_defect(points_path, degree, flags);
        if (cmd_certify->parsed()) return run_certify(points_path, mu, flags);
        if (cmd_fact->parsed()) return run_factoriality(poly_path, census_path, d, mode, flags);
        if (cmd_gen->parsed()) return run_gen_example(d, lines_path, prefix, flags);
        if (cmd_bese->parsed()) return run_bese(points_path, xi, flags);
        if (cmd_campaign->parsed()) return run_campaign(config_path, flags);
    } catch (const cbkit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const cbkit::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const cbkit::SearchCapExceeded& e) {
        std::cerr << "search cap exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const cbkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_other;
    }
    return exit_other;
}
