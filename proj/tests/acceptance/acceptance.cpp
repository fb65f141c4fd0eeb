// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "../support.hpp"

#include <acmlines/criteria.hpp>
#include <acmlines/experiment.hpp>
#include <acmlines/ferrers.hpp>
#include <acmlines/oracles.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace acmlines;

namespace {

// Wall-clock budgets in seconds.
constexpr double kGoldenBudget = 1.0;
constexpr double kExhaustiveBudget = 120.0;
constexpr double kReisnerBudget = 300.0;
constexpr double kHilbertBudget = 600.0;
constexpr double kScanBudget = 600.0;
constexpr double kExperimentBudget = 600.0;

// Sample sizes and seeds.
constexpr int kReisnerSamples = 150;
constexpr int kHilbertSamples = 60;
constexpr int kScanSamples = 30;
constexpr int kHfTrials = 500;
constexpr std::uint64_t kReisnerSeed = 20240501;
constexpr std::uint64_t kHilbertSeed = 20240502;
constexpr std::uint64_t kScanSeed = 20240503;
constexpr std::uint64_t kHfSeed = 42;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

// ACM varieties met in criteria 4 and 5, reused by criterion 7.
std::vector<VarietyOfLines> g_acm_pool;

std::string cells(const CellSet& u) {
    std::string s = "{";
    for (const Cell& c : u) {
        if (s.size() > 1) s += ",";
        s += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    }
    return s + "}";
}

Outcome golden_examples() {
    Outcome o;
    // (a) fifteen lines.
    auto x15 = fixtures::load("ferrers_15_lines.json");
    auto s3 = resembles_ferrers(x15, Direction::Three);
    o.require(s3.resembles && s3.partition == std::vector<int>{5, 4, 3, 1}, "(a) X3 resembles Ferrers (5,4,3,1)");
    o.require(!resembles_ferrers(x15, Direction::One).resembles, "(a) X1 not Ferrers");
    o.require(!is_acm(x15).is_acm, "(a) not ACM");

    // (b) three lines.
    auto x3 = fixtures::load("not_acm_3_lines.json");
    for (Direction h : kAllDirections) {
        bool ok = resembles_ferrers(x3, h).resembles;
        o.require(ok, "(b) X" + std::to_string(direction_index(h)) + " = " + cells(x3.index_set(h)) +
                          " resembles a Ferrers diagram");
    }
    auto v3 = is_acm(x3);
    o.require(!v3.is_acm, "(b) not ACM");
    o.require(v3.cycle.has_value(), "(b) chordless cycle witness");
    if (v3.cycle) o.note("(b) witness " + v3.cycle->to_string());

    // (c) nine lines with multiplicities.
    auto x9 = fixtures::load("multiplicity_9_lines.json");
    MultiplicityTensor m(x9);
    bool mu = m.mu(1, 1, 1) == 3 && m.mu(2, 2, 2) == 3;
    for (auto [i, j, k] : {std::array{1, 2, 1}, {2, 2, 1}, {2, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 1, 2}})
        mu = mu && m.mu(i, j, k) == 2;
    o.require(mu, "(c) multiplicities");
    using M = std::vector<std::vector<int>>;
    o.require(m.slice_matrix(Direction::Three) == M{{1, 1}, {0, 1}} &&
                  m.slice_matrix(Direction::Two) == M{{1, 0}, {1, 1}} &&
                  m.slice_matrix(Direction::One) == M{{1, 1}, {0, 1}},
              "(c) M^(1), M^(2), M^(3)");
    o.require(!criterion_hyp6_numeric(m).holds, "(c) Hyp6 numeric criterion fails");
    o.require(!is_acm(x9).is_acm, "(c) not ACM");

    // (d) W.
    auto w = fixtures::load("w_10_lines.json");
    auto vw = is_acm(w);
    o.require(vw.is_acm && vw.routes.hyp_all() && vw.routes.numeric_all() && vw.routes.chordal, "(d) W passes all criteria");
    o.require(reisner_cm(stanley_reisner_complex(w)), "(d) W passes the Reisner oracle");
    return o;
}

Outcome ferrers_example() {
    Outcome o;
    auto x = fixtures::load("ferrers_box_4_3_2.json");
    auto g = minimal_generators(x);
    o.require(g.degrees == DegreeSet{{0, 3, 2}, {4, 0, 2}, {4, 3, 0}}, "D-hat = {(4,3,0),(4,0,2),(0,3,2)}");
    auto p = g.products();
    std::sort(p.begin(), p.end());
    o.require(p == std::vector<std::string>{"A1*A2*A3*A4*B1*B2*B3", "A1*A2*A3*A4*C1*C2", "B1*B2*B3*C1*C2"},
              "generator products");
    auto dh = delta_hilbert(x, {6, 6, 6});
    int mismatches = 0;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j)
            for (int k = 0; k <= 6; ++k) {
                bool zero = (i >= 4 && j >= 3) || (i >= 4 && k >= 2) || (j >= 3 && k >= 2);
                mismatches += dh.at(i, j, k) != (zero ? 0 : 1);
            }
    o.require(mismatches == 0, "delta H case split");
    return o;
}

Outcome ci_example() {
    Outcome o;
    auto ci = detect_complete_intersection(fixtures::load("ci_lines.json"));
    o.require(ci && ci->f1 == DegreeTriple{0, 3, 0} && ci->f2 == DegreeTriple{4, 0, 2}, "CI degrees (0,3,0), (4,0,2)");
    o.require(grid_resolution(2, 3, 2).to_string() ==
                  "0 -> R^2(-2,-3,-2) -> R(-2,-3,0) + R(-2,0,-2) + R(0,-3,-2) -> I -> 0",
              "grid resolution twists");
    auto g = fixtures::load_points("points_box_2_3_2.json");
    o.require(g.u3().size() == 6 && g.u2().size() == 4 && g.u1().size() == 6, "line counts 6/4/6");
    return o;
}

Outcome three_routes() {
    Outcome o;
    int disagreements = 0, acm = 0, full = 0;
    for (unsigned mask = 0; mask < 4096; ++mask) {
        CellSet u3, u2, u1;
        for (int b = 0; b < 4; ++b) {
            Cell c{b / 2 + 1, b % 2 + 1};
            if (mask >> b & 1) u3.insert(c);
            if (mask >> (b + 4) & 1) u2.insert(c);
            if (mask >> (b + 8) & 1) u1.insert(c);
        }
        VarietyOfLines raw({2, 2, 2}, u3, u2, u1);
        VarietyOfLines x = compact(raw);
        full += x.d() == raw.d();
        auto v = evaluate_routes(x);
        auto vr = evaluate_routes(raw);
        if (!v.routes.unanimous() || !vr.routes.unanimous() || v.is_acm != vr.is_acm) ++disagreements;
        if (v.is_acm && !x.empty()) {
            ++acm;
            g_acm_pool.push_back(x);
        }
    }
    o.require(disagreements == 0, "zero disagreements");
    o.note("4096 varieties, " + std::to_string(full) + " without unused hyperplanes, " + std::to_string(acm) +
           " ACM, " + std::to_string(disagreements) + " disagreements");
    return o;
}

Outcome reisner_consistency() {
    Outcome o;
    std::mt19937_64 rng(kReisnerSeed);
    int tested = 0, mismatches = 0, acm = 0;
    while (tested < kReisnerSamples) {
        auto x = random_variety(rng, 3, 0.5);
        if (x.empty()) continue;
        ++tested;
        bool a = is_acm(x).is_acm;
        auto sr = stanley_reisner_complex(x);
        bool cm = reisner_cm(sr);
        if (cm != a) ++mismatches;
        if (cm && !sr.pure()) ++mismatches;
        if (a) {
            ++acm;
            g_acm_pool.push_back(x);
        }
    }
    o.require(mismatches == 0, "Reisner criterion agrees with is_acm");
    o.note(std::to_string(tested) + " varieties, " + std::to_string(acm) + " ACM, " + std::to_string(mismatches) +
           " mismatches");
    return o;
}

Outcome hilbert_agreement() {
    Outcome o;
    std::mt19937_64 rng(kHilbertSeed);
    const DegreeTriple box{6, 6, 6};
    int mismatches = 0;
    for (int t = 0; t < kHilbertSamples; ++t) {
        auto x = random_ferrers_variety(rng, 4);
        if (hilbert_function(x, box) != hilbert_oracle(x, box)) ++mismatches;
    }
    o.require(mismatches == 0, "corollary equals oracle on random Ferrers varieties");

    int grid_mismatches = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                auto r = grid_resolution(a, b, c);
                auto x = box_grid(a, b, c);
                auto h = hilbert_oracle(x, box);
                auto hf = hilbert_function(x, box);
                for (int i = 0; i <= 6; ++i)
                    for (int j = 0; j <= 6; ++j)
                        for (int k = 0; k <= 6; ++k)
                            grid_mismatches += h.at(i, j, k) != r.hilbert(i, j, k) || hf.at(i, j, k) != h.at(i, j, k);
            }
    o.require(grid_mismatches == 0, "box grids match the resolution formula");
    o.note(std::to_string(kHilbertSamples) + " Ferrers varieties, 64 box grids, box (6,6,6)");
    return o;
}

Outcome hereditary() {
    Outcome o;
    int violations = 0, removals = 0;
    for (const auto& x : g_acm_pool) {
        for (const auto& h : x.hyperplanes()) {
            if (x.lines_on(h) == 0) continue;
            ++removals;
            if (!is_acm(remove_hyperplane(x, h)).is_acm) ++violations;
        }
    }
    o.require(!g_acm_pool.empty(), "ACM pool from criteria 4 and 5 is nonempty");
    o.require(violations == 0, "removing a hyperplane keeps ACM");
    o.note(std::to_string(g_acm_pool.size()) + " ACM varieties, " + std::to_string(removals) + " removals, " +
           std::to_string(violations) + " violations");
    return o;
}

Outcome generator_scan() {
    Outcome o;
    std::mt19937_64 rng(kScanSeed);
    int mismatches = 0;
    for (int t = 0; t < kScanSamples; ++t) {
        auto x = random_ferrers_variety(rng, 3);
        auto scan = generator_degree_scan(x, {6, 6, 6});
        bool single = std::all_of(scan.counts.begin(), scan.counts.end(), [](int c) { return c == 1; });
        if (scan.degrees != minimal_generators(x).degrees || !single || scan.box_too_small) ++mismatches;
    }
    o.require(mismatches == 0, "scan equals D-hat");
    o.note(std::to_string(kScanSamples) + " Ferrers varieties, box (6,6,6)");
    return o;
}

Outcome hf_question() {
    Outcome o;
    auto pair = fixtures::load("companion_pair.json");
    o.require(!compare_with_companion(pair, {4, 4, 4}).has_value(), "companion pair has H_X = H_X'");

    ExperimentConfig cfg;
    cfg.trials = kHfTrials;
    cfg.dmax = 3;
    cfg.box = {4, 4, 4};
    cfg.seed = kHfSeed;
    ExperimentReport r;
    try {
        r = hf_experiment(cfg);
    } catch (const std::exception& e) {
        o.require(false, std::string("experiment raised ") + e.what());
        return o;
    }
    o.require(r.trials == kHfTrials, "all trials ran");
    o.require(r.equal + r.unequal == r.companions, "equal + unequal = companions");
    o.require(r.counterexamples.empty() == (r.unequal == 0), "counterexamples listed iff inequalities");

    std::filesystem::create_directories("hf_artifacts");
    std::ofstream("hf_artifacts/report.json") << r.to_json().dump(2) << "\n";
    o.note(std::to_string(r.trials) + " trials, " + std::to_string(r.acm_found) + " ACM, " +
           std::to_string(r.equal) + " equal, " + std::to_string(r.unequal) +
           " potential counterexamples (informational)");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden examples", kGoldenBudget, golden_examples},
        {2, "Ferrers example degrees and delta H", kGoldenBudget, ferrers_example},
        {3, "complete intersection and grid", kGoldenBudget, ci_example},
        {4, "three-route consistency on d = (2,2,2)", kExhaustiveBudget, three_routes},
        {5, "Reisner oracle consistency", kReisnerBudget, reisner_consistency},
        {6, "Hilbert function agreement", kHilbertBudget, hilbert_agreement},
        {7, "hereditary ACM", kGoldenBudget * 60, hereditary},
        {8, "generator scan equals D-hat", kScanBudget, generator_scan},
        {9, "HF experiment", kExperimentBudget, hf_question},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget) o.require(false, "time budget " + std::to_string(c.budget) + " s");
        std::printf("%s %d %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs);
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        failures += !o.pass;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
