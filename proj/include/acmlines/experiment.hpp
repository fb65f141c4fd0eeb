#pragma once

#include <acmlines/ferrers.hpp>
#include <acmlines/variety.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace acmlines {

/// Random variety: d_f uniform in 1..dmax, each possible line kept with
/// probability p, then compacted. May be empty.
VarietyOfLines random_variety(std::mt19937_64& rng, int dmax, double p);

/// Rejection-samples until an ACM variety appears, at most max_attempts
/// draws. `attempts` receives the number of draws used.
std::optional<VarietyOfLines> random_acm_variety(std::mt19937_64& rng, int dmax, double p, int max_attempts,
                                                 int* attempts = nullptr);

/// A random Ferrers variety with d_f <= dmax: random partitions per
/// direction laid out left-justified on a common labelling. Never empty.
VarietyOfLines random_ferrers_variety(std::mt19937_64& rng, int dmax);

struct ExperimentConfig {
    int trials = 500;
    int dmax = 3;
    DegreeTriple box{4, 4, 4};
    std::uint64_t seed = 42;
    double p = 0.4;
    int max_attempts = 1000;
    /// Run before the random trials, one trial each.
    std::vector<VarietyOfLines> fixed_inputs;
};

struct Counterexample {
    VarietyOfLines x;
    VarietyOfLines companion;
    DegreeTriple degree;
    std::int64_t h_x = 0;
    std::int64_t h_companion = 0;
};

struct ExperimentReport {
    int trials = 0;
    int draws = 0;
    int acm_found = 0;
    int companions = 0;
    int equal = 0;
    int unequal = 0;
    std::vector<Counterexample> counterexamples;

    nlohmann::json to_json() const;
};

/// First multidegree in the box where H_X differs from the Ferrers formula
/// for its companion, if any.
std::optional<Counterexample> compare_with_companion(const VarietyOfLines& x, DegreeTriple box);

/// Trial t draws from its own generator seeded by (seed, t), so trials are
/// reproducible one by one.
ExperimentReport hf_experiment(const ExperimentConfig& config);

}  // namespace acmlines
