#include <doctest.h>

#include <acmlines/exact.hpp>

#include <random>

using namespace acmlines::exact;

TEST_SUITE("exact") {

TEST_CASE("Bareiss rank") {
    RationalMatrix m(3, 3);
    int v[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = v[r][c];
    CHECK(m.rank() == 2);

    RationalMatrix q(2, 2);
    q.at(0, 0) = Rational(1, 3);
    q.at(0, 1) = Rational(1, 2);
    q.at(1, 0) = Rational(2, 3);
    q.at(1, 1) = 1;
    CHECK(q.rank() == 1);
    q.at(1, 1) = Rational(7, 5);
    CHECK(q.rank() == 2);

    CHECK(RationalMatrix(0, 4).rank() == 0);
    CHECK(RationalMatrix(3, 4).rank() == 0);
}

TEST_CASE("sparse echelon agrees with dense rank and yields a nullspace") {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::bernoulli_distribution zero(0.5);
    for (int t = 0; t < 200; ++t) {
        int rows = 1 + t % 7;
        int cols = 1 + (t / 7) % 8;
        RationalMatrix dense(rows, cols);
        std::vector<SparseVector> vs;
        for (int r = 0; r < rows; ++r) {
            SparseVector v;
            for (int c = 0; c < cols; ++c) {
                int x = zero(rng) ? 0 : entry(rng);
                dense.at(r, c) = x;
                v.push(c, x);
            }
            vs.push_back(v);
        }
        EchelonBasis b(cols);
        for (const auto& v : vs) b.insert(v);
        CHECK(b.rank() == dense.rank());

        auto kernel = b.orthogonal_complement();
        CHECK(kernel.size() + b.rank() == static_cast<std::size_t>(cols));
        for (const auto& k : kernel) {
            for (const auto& v : vs) {
                Integer dot = 0;
                for (const auto& [i, x] : v.entries) dot += x * k.at(i);
                CHECK(dot == 0);
            }
        }
        CHECK(rank_of(kernel, cols) == kernel.size());
        for (const auto& v : vs) CHECK(b.reduce(v).empty());
    }
}

TEST_CASE("primitive form") {
    SparseVector v;
    v.push(1, -4);
    v.push(3, 6);
    v.make_primitive();
    CHECK(v.at(1) == 2);
    CHECK(v.at(3) == -3);
    CHECK(v.at(2) == 0);
}

}
