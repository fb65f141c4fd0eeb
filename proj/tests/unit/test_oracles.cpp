#include <doctest.h>

#include "../support.hpp"

#include <acmlines/criteria.hpp>
#include <acmlines/experiment.hpp>
#include <acmlines/ferrers.hpp>
#include <acmlines/oracles.hpp>

#include <algorithm>
#include <bit>

using namespace acmlines;

namespace {

VarietyOfLines from_mask(unsigned mask) {
    CellSet u3, u2, u1;
    for (int b = 0; b < 4; ++b) {
        Cell c{b / 2 + 1, b % 2 + 1};
        if (mask >> b & 1) u3.insert(c);
        if (mask >> (b + 4) & 1) u2.insert(c);
        if (mask >> (b + 8) & 1) u1.insert(c);
    }
    return VarietyOfLines({2, 2, 2}, u3, u2, u1);
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("Lagrange vectors") {
    for (int n = 0; n <= 4; ++n)
        for (int x = 1; x <= 9; ++x) {
            auto v = lagrange_vector(n, x);
            CHECK(v.size() == static_cast<std::size_t>(n + 1));
            // Reproduces t^p for p <= n.
            for (int p = 0; p <= n; ++p) {
                exact::Integer s = 0;
                for (int m = 1; m <= n + 1; ++m) {
                    exact::Integer mp;
                    mpz_ui_pow_ui(mp.get_mpz_t(), m, p);
                    s += v[m - 1] * mp;
                }
                exact::Integer xp;
                mpz_ui_pow_ui(xp.get_mpz_t(), x, p);
                CHECK(s == xp);
            }
        }
}

TEST_CASE("nodal and monomial evaluation ranks agree") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        auto x = random_variety(rng, 3, 0.5);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
                for (int k = 0; k <= 2; ++k) CHECK(hilbert_oracle_at(x, i, j, k) == hilbert_oracle_monomial(x, i, j, k));
    }
    auto box = fixtures::load("ferrers_box_4_3_2.json");
    CHECK(hilbert_oracle_at(box, 3, 2, 1) == hilbert_oracle_monomial(box, 3, 2, 1));
}

TEST_CASE("empty variety has no conditions") {
    auto h = hilbert_oracle(VarietyOfLines({0, 0, 0}, {}, {}, {}), {2, 2, 2});
    CHECK(std::all_of(h.data().begin(), h.data().end(), [](auto v) { return v == 0; }));
}

TEST_CASE("grid of a box matches the resolution") {
    auto r = grid_resolution(2, 3, 2);
    auto h = hilbert_oracle(fixtures::load_points("points_box_2_3_2.json"), {5, 5, 5});
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j)
            for (int k = 0; k <= 5; ++k) CHECK(h.at(i, j, k) == r.hilbert(i, j, k));
}

TEST_CASE("Ferrers example matches the corollary") {
    auto x = fixtures::load("ferrers_box_4_3_2.json");
    CHECK(hilbert_oracle(x, {6, 6, 6}) == hilbert_function(x, {6, 6, 6}));
}

TEST_CASE("Hilbert function sanity") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 20; ++t) {
        auto x = random_variety(rng, 3, 0.5);
        auto h = hilbert_oracle(x, {4, 4, 4});
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j)
                for (int k = 0; k <= 4; ++k) {
                    CHECK(h.at(i, j, k) <= (i + 1) * (j + 1) * (k + 1));
                    if (i < 4) CHECK(h.at(i, j, k) <= h.at(i + 1, j, k));
                    if (j < 4) CHECK(h.at(i, j, k) <= h.at(i, j + 1, k));
                    if (k < 4) CHECK(h.at(i, j, k) <= h.at(i, j, k + 1));
                }
    }
}

TEST_CASE("cone over points restricts to the point Hilbert function") {
    // Diagram (3,2,2,1): H(i,j) counts cells (r,c) with r <= i+1, c <= j+1.
    std::vector<int> lambda{3, 2, 2, 1};
    CellSet u;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 1; c <= lambda[r]; ++c) u.insert({static_cast<int>(r) + 1, c});
    VarietyOfLines cone({4, 3, 0}, u, {}, {});
    auto h = hilbert_oracle(cone, {5, 5, 0});
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) {
            std::int64_t n = 0;
            for (const Cell& c : u) n += (c.row <= i + 1 && c.col <= j + 1);
            CHECK(h.at(i, j, 0) == n);
        }
}

TEST_CASE("generator scan") {
    auto box = generator_degree_scan(fixtures::load("ferrers_box_4_3_2.json"), {6, 6, 6});
    CHECK_FALSE(box.box_too_small);
    CHECK(box.degrees == DegreeSet{{0, 3, 2}, {4, 0, 2}, {4, 3, 0}});
    CHECK(box.counts == std::vector<int>{1, 1, 1});

    auto line = generator_degree_scan(fixtures::load("single_line.json"), {3, 3, 3});
    CHECK(line.degrees == DegreeSet{{0, 1, 0}, {1, 0, 0}});

    auto ci = generator_degree_scan(fixtures::load("ci_lines.json"), {6, 6, 6});
    CHECK(ci.degrees == DegreeSet{{0, 3, 0}, {4, 0, 2}});

    auto small = generator_degree_scan(fixtures::load("ferrers_box_4_3_2.json"), {3, 3, 3});
    CHECK(small.box_too_small);
    CHECK_FALSE(small.warnings.empty());
}

TEST_CASE("Stanley-Reisner complex") {
    auto line = stanley_reisner_complex(fixtures::load("single_line.json"));
    CHECK(line.vertex_count() == 2);
    CHECK(line.facets() == std::vector<std::uint32_t>{0});

    auto bad = stanley_reisner_complex(fixtures::load("not_acm_3_lines.json"));
    CHECK(bad.facets().size() == 3);
    for (auto f : bad.facets()) CHECK(std::popcount(f) == bad.vertex_count() - 2);

    auto literal = stanley_reisner_complex(make_variety(fixtures::raw("not_acm_3_lines.json"), ValidationMode::Lenient));
    CHECK(literal.vertex_count() == 8);
    CHECK(literal.facets().size() == 3);
    for (auto f : literal.facets()) CHECK(std::popcount(f) == 6);

    auto grid = stanley_reisner_complex(box_grid(2, 2, 2));
    CHECK(grid.vertex_count() == 6);
    CHECK(grid.facets().size() == 12);
    for (auto f : grid.facets()) CHECK(std::popcount(f) == 4);

    CHECK_THROWS_AS(stanley_reisner_complex(VarietyOfLines({1, 1, 1}, {}, {}, {})), Error);
    CHECK_THROWS_AS(stanley_reisner_complex(box_grid(6, 6, 6)), Error);
}

TEST_CASE("Reisner criterion") {
    CHECK_FALSE(reisner_cm(stanley_reisner_complex(fixtures::load("not_acm_3_lines.json"))));
    CHECK(reisner_cm(stanley_reisner_complex(fixtures::load("w_10_lines.json"))));
    CHECK_FALSE(reisner_cm(stanley_reisner_complex(fixtures::load("multiplicity_9_lines.json"))));

    std::vector<HyperplaneId> v{{Family::A, 1}, {Family::A, 2}, {Family::B, 1}, {Family::B, 2}, {Family::C, 1}};
    CHECK(reisner_cm(SimplicialComplex(v, {0b00111})));
    // Two disjoint edges: disconnected, not CM.
    CHECK_FALSE(reisner_cm(SimplicialComplex(v, {0b00011, 0b01100})));
    // Circle: CM in dimension one.
    CHECK(reisner_cm(SimplicialComplex(v, {0b00011, 0b00110, 0b00101})));
    auto betti = SimplicialComplex(v, {0b00011, 0b00110, 0b00101}).reduced_betti();
    CHECK(betti == std::vector<std::int64_t>{0, 0, 1});
}

TEST_CASE("Reisner agrees with the criteria on every variety of d = (2,2,2)") {
    int mismatches = 0;
    for (unsigned mask = 1; mask < 4096; ++mask) {
        auto x = from_mask(mask);
        auto sr = stanley_reisner_complex(x);
        bool cm = reisner_cm(sr);
        if (cm) CHECK(sr.pure());
        if (cm != is_acm(x).is_acm) ++mismatches;
    }
    CHECK(mismatches == 0);
}

}
