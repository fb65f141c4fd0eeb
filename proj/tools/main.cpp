// acmlines command-line front end.
//
// Exit status: check -> 0 ACM, 1 not ACM, 2 input error, 3 routes disagree.
// Every other command -> 0 ok, 1 rejected by the domain (not Ferrers, not
// ACM, not a complete intersection), 2 input error.

#include <acmlines/criteria.hpp>
#include <acmlines/experiment.hpp>
#include <acmlines/ferrers.hpp>
#include <acmlines/graph.hpp>
#include <acmlines/io.hpp>
#include <acmlines/oracles.hpp>
#include <acmlines/report.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace acmlines;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kInputError = 2;
constexpr int kDisagreement = 3;

struct InputOptions {
    std::string file;
    bool strict = false;
};

VarietyOfLines load(const InputOptions& in) {
    RawVariety raw = io::parse_variety_text(io::read_file(in.file));
    auto result = validate(raw, in.strict ? ValidationMode::Strict : ValidationMode::Lenient);
    for (const auto& v : result.violations) {
        if (v.warning) std::cerr << "warning: " << to_string(v.code) << ": " << v.message << "\n";
    }
    if (!result.ok()) {
        for (const auto& v : result.violations)
            if (!v.warning) throw Error(v.code, v.message);
    }
    return compact(*result.variety);
}

DegreeTriple to_box(const std::vector<int>& v) {
    if (v.size() != 3 || v[0] < 0 || v[1] < 0 || v[2] < 0) {
        throw Error(ErrorCode::ParseError, "--box needs three nonnegative integers");
    }
    return {v[0], v[1], v[2]};
}

int status_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::NotFerrers:
        case ErrorCode::NotAcm:
        case ErrorCode::EmptyVariety:
            return kRejected;
        case ErrorCode::CriteriaDisagreement:
            return kDisagreement;
        default:
            return kInputError;
    }
}

std::string pass(bool b) { return b ? "pass" : "fail"; }

void print_routes(const RouteVerdicts& r) {
    std::cout << "routes: chordal=" << pass(r.chordal);
    for (int n = 4; n <= 6; ++n) std::cout << " hyp" << n << "=" << pass(r.hyp[n - 4]);
    for (int n = 4; n <= 6; ++n) std::cout << " numeric" << n << "=" << pass(r.numeric[n - 4]);
    std::cout << "\n";
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << text;
}

int cmd_check(const InputOptions& in, bool oracle, bool witness, bool as_json, const std::string& dot) {
    VarietyOfLines x = load(in);
    AcmVerdict v = evaluate_routes(x);
    bool agree = v.routes.unanimous();

    std::optional<bool> cm;
    if (oracle && !x.empty()) cm = reisner_cm(stanley_reisner_complex(x));
    bool oracle_agrees = !cm || *cm == v.is_acm;

    if (!dot.empty()) {
        auto g = build_graph(x);
        write_text(dot, to_dot(g.graph, "G") + to_dot(complement(g).graph, "Gc"));
    }

    if (as_json) {
        json j = io::verdict_to_json(v);
        if (cm) j["oracle"] = {{"reisner_cm", *cm}, {"agrees", oracle_agrees}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (v.is_acm ? "ACM" : "not ACM") << "\n";
        print_routes(v.routes);
        if (!agree) std::cout << "error: routes disagree\n";
        if (cm) std::cout << "oracle: reisner " << (*cm ? "CM" : "not CM") << (oracle_agrees ? ", agrees" : ", DISAGREES") << "\n";
        if (witness && !v.is_acm) {
            if (v.failing_n) std::cout << "failing n: " << *v.failing_n << "\n";
            if (v.cycle) std::cout << "cycle: " << v.cycle->to_string() << "\n";
            if (v.hyp_witness) std::cout << "hyp tuple: " << v.hyp_witness->to_string() << "\n";
            if (v.numeric_witness) std::cout << "numeric: " << v.numeric_witness->to_string() << "\n";
        }
    }
    if (!agree || !oracle_agrees) return kDisagreement;
    return v.is_acm ? kOk : kRejected;
}

int cmd_ferrers(const InputOptions& in) {
    VarietyOfLines x = load(in);
    auto fr = is_ferrers_variety(x);
    for (Direction h : {Direction::Three, Direction::Two, Direction::One}) {
        auto s = resembles_ferrers(x, h);
        std::cout << "X" << direction_index(h) << ": " << (s.resembles ? "resembles Ferrers" : "not Ferrers")
                  << (s.literal ? " (literal)" : "") << ", partition (";
        for (std::size_t i = 0; i < s.partition.size(); ++i) std::cout << (i ? "," : "") << s.partition[i];
        std::cout << ")\n";
    }
    std::cout << "Ferrers variety: " << (fr.ferrers ? "yes" : "no") << "\n";
    if (fr.relabeling) {
        for (Family f : kAllFamilies) {
            std::cout << family_letter(f) << ":";
            const auto& p = (*fr.relabeling)[family_index(f)];
            for (std::size_t i = 0; i < p.size(); ++i) std::cout << " " << i + 1 << "->" << p[i];
            std::cout << "\n";
        }
    }
    return fr.ferrers ? kOk : kRejected;
}

int cmd_hilbert(const InputOptions& in, const std::vector<int>& box_v, const std::string& method,
                const std::string& format) {
    VarietyOfLines x = load(in);
    DegreeTriple box = to_box(box_v);
    Grid3 h = method == "oracle" ? hilbert_oracle(x, box) : hilbert_function(x, box);
    Grid3 dh = first_difference(h);
    if (format == "json") {
        std::cout << io::hilbert_json(dh, h).dump() << "\n";
    } else {
        std::cout << io::hilbert_csv(dh, h);
    }
    return kOk;
}

int cmd_gens(const InputOptions& in, bool oracle, const std::vector<int>& box_v) {
    VarietyOfLines x = load(in);
    if (oracle) {
        auto scan = generator_degree_scan(x, to_box(box_v));
        for (const auto& w : scan.warnings) std::cerr << "warning: " << w << "\n";
        for (std::size_t i = 0; i < scan.degrees.size(); ++i) {
            std::cout << scan.degrees[i].to_string() << " x" << scan.counts[i] << "\n";
        }
        return kOk;
    }
    auto g = minimal_generators(x);
    for (const auto& t : g.degrees) std::cout << t.to_string() << " " << g.product(t) << "\n";
    return kOk;
}

int cmd_grid(const std::string& points_file, const std::vector<int>& box_v) {
    VarietyOfLines x;
    if (!box_v.empty()) {
        DegreeTriple b = to_box(box_v);
        if (b.a < 1 || b.b < 1 || b.c < 1) throw Error(ErrorCode::ParseError, "--box entries must be positive");
        x = box_grid(b.a, b.b, b.c);
        auto r = grid_resolution(b.a, b.b, b.c);
        std::cerr << "resolution: " << r.to_string() << "\n";
        std::cerr << "hilbert-burch:\n";
        for (const auto& row : r.hilbert_burch) std::cerr << "  [" << row[0] << ", " << row[1] << "]\n";
    } else {
        if (points_file.empty()) throw Error(ErrorCode::ParseError, "grid needs a point file or --box");
        x = grid_from_points(io::parse_points_text(io::read_file(points_file)));
    }
    std::cerr << "lines: " << x.u3().size() << " of type (1,1,0), " << x.u2().size() << " of type (1,0,1), "
              << x.u1().size() << " of type (0,1,1)\n";
    std::cout << io::to_json(x).dump() << "\n";
    return kOk;
}

int cmd_ci(const InputOptions& in) {
    VarietyOfLines x = load(in);
    auto ci = detect_complete_intersection(x);
    if (!ci) {
        std::cout << "not a complete intersection\n";
        return kRejected;
    }
    std::cout << "complete intersection: deg F1 = " << ci->f1.to_string() << ", deg F2 = " << ci->f2.to_string()
              << "\n";
    auto g = minimal_generators(x);
    std::cout << "F1 = " << g.product(ci->f1) << "\nF2 = " << g.product(ci->f2) << "\n";
    return kOk;
}

int cmd_render(const InputOptions& in, int direction) {
    VarietyOfLines x = load(in);
    if (direction == 0) {
        for (int h : {3, 2, 1}) {
            std::cout << "X" << h << ":\n" << render(x, direction_from_int(h));
        }
    } else {
        std::cout << render(x, direction_from_int(direction));
    }
    return kOk;
}

int cmd_hf(ExperimentConfig cfg, const std::vector<int>& box_v, const std::vector<std::string>& inputs,
           const std::string& out_dir) {
    cfg.box = to_box(box_v);
    if (cfg.dmax < 1) throw Error(ErrorCode::ParseError, "--dmax must be positive");
    if (cfg.trials < 0) throw Error(ErrorCode::ParseError, "--trials must be nonnegative");
    for (const auto& f : inputs) cfg.fixed_inputs.push_back(load({f, false}));
    ExperimentReport report = hf_experiment(cfg);
    json j = report.to_json();
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_text(out_dir + "/report.json", j.dump(2) + "\n");
        for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
            write_text(out_dir + "/counterexample_" + std::to_string(i + 1) + ".json",
                       j["counterexamples"][i].dump(2) + "\n");
        }
    }
    std::cout << j.dump(2) << "\n";
    if (report.unequal > 0) {
        std::cerr << "note: " << report.unequal << " potential counterexample(s) to H_X = H_X'\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACM varieties of lines in P1 x P1 x P1"};
    app.require_subcommand(1);

    InputOptions in;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", in.file, "variety JSON")->required();
        sub->add_flag("--strict", in.strict, "reject unused hyperplane indices");
    };

    bool oracle = false, witness = false, as_json = false;
    std::string dot;
    auto* check = app.add_subcommand("check", "decide ACM by the three criteria");
    add_input(check);
    check->add_flag("--oracle", oracle, "cross-check with Reisner's criterion");
    check->add_flag("--witness", witness, "print the failing cycle and patterns");
    check->add_flag("--json", as_json, "print the verdict as JSON");
    check->add_option("--dot", dot, "write G_X and its complement as DOT");

    auto* ferrers = app.add_subcommand("ferrers", "Ferrers shape of each slice and of X");
    add_input(ferrers);

    std::vector<int> box{6, 6, 6};
    std::string method = "corollary", format = "csv";
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
    add_input(hilbert);
    hilbert->add_option("--box", box, "largest multidegree i j k")->expected(3);
    hilbert->add_option("--method", method)->check(CLI::IsMember({"corollary", "oracle"}));
    hilbert->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* gens = app.add_subcommand("gens", "minimal generators");
    add_input(gens);
    gens->add_flag("--oracle", oracle, "scan degrees with the evaluation oracle");
    gens->add_option("--box", box, "scan box i j k")->expected(3);

    std::string points_file;
    std::vector<int> grid_box;
    auto* grid = app.add_subcommand("grid", "grid of lines through a point set");
    grid->add_option("file", points_file, "point-set JSON");
    grid->add_option("--box", grid_box, "full box a b c instead of a file")->expected(3);

    auto* ci = app.add_subcommand("ci", "detect a complete intersection of lines");
    add_input(ci);

    int direction = 0;
    auto* rend = app.add_subcommand("render", "marker grids of the index sets");
    add_input(rend);
    rend->add_option("--direction", direction, "1, 2 or 3; all when omitted")->check(CLI::Range(1, 3));

    ExperimentConfig cfg;
    std::vector<int> hf_box{4, 4, 4};
    std::vector<std::string> hf_inputs;
    std::string out_dir;
    auto* hf = app.add_subcommand("hf-experiment", "compare H_X with its Ferrers companion");
    hf->add_option("--trials", cfg.trials);
    hf->add_option("--dmax", cfg.dmax);
    hf->add_option("--box", hf_box)->expected(3);
    hf->add_option("--seed", cfg.seed);
    hf->add_option("--p", cfg.p)->check(CLI::Range(0.0, 1.0));
    hf->add_option("--input", hf_inputs, "variety files run before the random trials");
    hf->add_option("--out-dir", out_dir, "where report.json and counterexamples go");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return cmd_check(in, oracle, witness, as_json, dot);
        if (*ferrers) return cmd_ferrers(in);
        if (*hilbert) return cmd_hilbert(in, box, method, format);
        if (*gens) return cmd_gens(in, oracle, box);
        if (*grid) return cmd_grid(points_file, grid_box);
        if (*ci) return cmd_ci(in);
        if (*rend) return cmd_render(in, direction);
        if (*hf) return cmd_hf(cfg, hf_box, hf_inputs, out_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return status_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
