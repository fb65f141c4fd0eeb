#include <acmlines/experiment.hpp>

#include <acmlines/criteria.hpp>
#include <acmlines/io.hpp>
#include <acmlines/oracles.hpp>

#include <algorithm>

namespace acmlines {

VarietyOfLines random_variety(std::mt19937_64& rng, int dmax, double p) {
    std::uniform_int_distribution<int> dim(1, dmax);
    std::bernoulli_distribution keep(p);
    Dims d{dim(rng), dim(rng), dim(rng)};
    CellSet u3, u2, u1;
    for (int i = 1; i <= d[0]; ++i)
        for (int j = 1; j <= d[1]; ++j)
            if (keep(rng)) u3.insert({i, j});
    for (int i = 1; i <= d[0]; ++i)
        for (int k = 1; k <= d[2]; ++k)
            if (keep(rng)) u2.insert({i, k});
    for (int j = 1; j <= d[1]; ++j)
        for (int k = 1; k <= d[2]; ++k)
            if (keep(rng)) u1.insert({j, k});
    return compact(VarietyOfLines(d, u3, u2, u1));
}

std::optional<VarietyOfLines> random_acm_variety(std::mt19937_64& rng, int dmax, double p, int max_attempts,
                                                 int* attempts) {
    for (int a = 1; a <= max_attempts; ++a) {
        VarietyOfLines x = random_variety(rng, dmax, p);
        if (!x.empty() && is_acm(x).is_acm) {
            if (attempts) *attempts = a;
            return x;
        }
    }
    if (attempts) *attempts = max_attempts;
    return std::nullopt;
}

VarietyOfLines random_ferrers_variety(std::mt19937_64& rng, int dmax) {
    std::uniform_int_distribution<int> dim(1, dmax);
    auto diagram = [&](int rows, int cols) {
        std::uniform_int_distribution<int> len(0, cols);
        std::vector<int> lambda(rows);
        for (int& l : lambda) l = len(rng);
        std::sort(lambda.rbegin(), lambda.rend());
        CellSet u;
        for (int r = 0; r < rows; ++r)
            for (int c = 1; c <= lambda[r]; ++c) u.insert({r + 1, c});
        return u;
    };
    for (;;) {
        Dims d{dim(rng), dim(rng), dim(rng)};
        VarietyOfLines x = compact(VarietyOfLines(d, diagram(d[0], d[1]), diagram(d[0], d[2]), diagram(d[1], d[2])));
        if (!x.empty()) return x;
    }
}

std::optional<Counterexample> compare_with_companion(const VarietyOfLines& x, DegreeTriple box) {
    VarietyOfLines xp = ferrers_companion(x);
    Grid3 hx = hilbert_oracle(x, box);
    Grid3 hp = hilbert_function(xp, box);
    for (int i = 0; i <= box.a; ++i)
        for (int j = 0; j <= box.b; ++j)
            for (int k = 0; k <= box.c; ++k) {
                if (hx.at(i, j, k) != hp.at(i, j, k)) {
                    return Counterexample{x, xp, {i, j, k}, hx.at(i, j, k), hp.at(i, j, k)};
                }
            }
    return std::nullopt;
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json ce = nlohmann::json::array();
    for (const auto& c : counterexamples) {
        ce.push_back({{"variety", io::to_json(c.x)},
                      {"companion", io::to_json(c.companion)},
                      {"degree", {c.degree.a, c.degree.b, c.degree.c}},
                      {"H_X", c.h_x},
                      {"H_companion", c.h_companion}});
    }
    return {{"trials", trials},   {"draws", draws}, {"acm_found", acm_found}, {"companions_built", companions},
            {"equal", equal},     {"unequal", unequal}, {"counterexamples", ce}};
}

ExperimentReport hf_experiment(const ExperimentConfig& config) {
    ExperimentReport report;
    auto run = [&](const VarietyOfLines& x) {
        ++report.acm_found;
        ++report.companions;
        if (auto ce = compare_with_companion(x, config.box)) {
            ++report.unequal;
            report.counterexamples.push_back(std::move(*ce));
        } else {
            ++report.equal;
        }
    };

    for (const auto& x : config.fixed_inputs) {
        ++report.trials;
        ++report.draws;
        if (is_acm(x).is_acm) run(x);
    }
    for (int t = 0; t < config.trials; ++t) {
        ++report.trials;
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        int used = 0;
        auto x = random_acm_variety(rng, config.dmax, config.p, config.max_attempts, &used);
        report.draws += used;
        if (x) run(*x);
    }
    return report;
}

}  // namespace acmlines
