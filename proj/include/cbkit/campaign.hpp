#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "cbkit/conditions.hpp"
#include "cbkit/curves.hpp"
#include "cbkit/rng.hpp"

namespace cbkit {

/// Randomized campaign over F_p configurations: sample, certify the main
/// theorem's hypotheses, and demand defect zero at degree 2*mu - 3 for every
/// fully certified trial. A violation refutes either the implementation or
/// the theorem, so the count must stay at zero.
struct CampaignConfig {
    int trials = 0;
    int mu_min = 3;
    int mu_max = 3;
    int ambient_dim = 3;
    std::uint64_t prime = 101;
    std::uint64_t seed = 0;
    std::size_t subset_cap = default_subset_cap;
    int retries = 8;

    void validate() const {
        if (trials < 0) throw ConfigError("trials must be >= 0");
        if (mu_min < 2) throw ConfigError("the theorem requires mu >= 2");
        if (mu_max < mu_min) throw ConfigError("empty mu range");
        if (ambient_dim < 2) throw ConfigError("ambient dimension must be >= 2");
        if (!is_prime(prime)) throw ConfigError("campaign field modulus must be prime");
        if (subset_cap == 0) throw ConfigError("subset cap must be positive");
        if (retries < 0) throw ConfigError("retries must be >= 0");
    }
};

struct CampaignTrial {
    int index = 0;
    int mu = 0;
    std::size_t size = 0;
    Status hypothesis_status = Status::Unknown;
    std::size_t defect = 0;
    bool violation = false;
};

struct CampaignSummary {
    int trials = 0;
    int certified = 0;
    int violated_hypotheses = 0;
    int unknown = 0;
    int violations = 0;
    std::vector<CampaignTrial> log;
};

/// Distinct random points of P^n(F_p), canonical representatives.
inline PointConfiguration<Fp> sample_fp_config(int ambient_dim, std::size_t count,
                                               std::uint64_t p, SplitMix64& g) {
    std::vector<ProjectivePoint<Fp>> pts;
    std::size_t guard = 0;
    while (pts.size() < count) {
        if (++guard > 1000 * (count + 1))
            throw RetriesExhausted("cannot sample enough distinct points");
        std::vector<Fp> coords;
        bool all_zero = true;
        for (int i = 0; i <= ambient_dim; ++i) {
            const Fp c(static_cast<std::int64_t>(g.below(p)), p);
            if (!is_zero(c)) all_zero = false;
            coords.push_back(c);
        }
        if (all_zero) continue;
        ProjectivePoint<Fp> candidate(std::move(coords));
        bool seen = false;
        for (const auto& q : pts)
            if (q == candidate) {
                seen = true;
                break;
            }
        if (!seen) pts.push_back(std::move(candidate));
    }
    if (pts.empty()) return PointConfiguration<Fp>(ambient_dim);
    return PointConfiguration<Fp>(std::move(pts));
}

inline CampaignSummary run_campaign(const CampaignConfig& config, std::ostream* log = nullptr) {
    config.validate();
    CampaignSummary summary;
    const FieldSpec<Fp> spec{config.prime};
    for (int t = 0; t < config.trials; ++t) {
        SplitMix64 g(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        const int mu = config.mu_min +
                       static_cast<int>(g.below(static_cast<std::uint64_t>(
                           config.mu_max - config.mu_min + 1)));
        const std::size_t max_size = static_cast<std::size_t>(mu) * mu - 1;
        const std::size_t size = 1 + g.below(max_size);
        const auto sigma = sample_fp_config(config.ambient_dim, size, config.prime, g);

        CertifyOptions options;
        options.seed = derive_seed(config.seed, 0x1000000u + static_cast<std::uint64_t>(t));
        options.projection_retries = config.retries;
        options.subset_cap = config.subset_cap;
        const auto report = certify_theorem_hypotheses(sigma, mu, options, spec);

        CampaignTrial trial;
        trial.index = t;
        trial.mu = mu;
        trial.size = size;
        trial.hypothesis_status = report.overall();
        trial.defect = conditions_defect(sigma, 2 * mu - 3);
        ++summary.trials;
        switch (trial.hypothesis_status) {
            case Status::Certified:
                ++summary.certified;
                if (trial.defect != 0) {
                    trial.violation = true;
                    ++summary.violations;
                }
                break;
            case Status::Violated: ++summary.violated_hypotheses; break;
            case Status::Unknown: ++summary.unknown; break;
        }
        summary.log.push_back(trial);
        if (log)
            (*log) << "trial=" << t << " mu=" << mu << " size=" << size
                   << " hypotheses=" << to_string(trial.hypothesis_status)
                   << " defect=" << trial.defect
                   << (trial.violation ? " THEOREM-VIOLATION" : "") << "\n";
    }
    return summary;
}

} // namespace cbkit
