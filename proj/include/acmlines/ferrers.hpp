#pragma once

#include <acmlines/variety.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acmlines {

/// Multidegree in N^3. operator<=> is only for sorting; use precedes()
/// for the componentwise order.
struct DegreeTriple {
    int a = 0;
    int b = 0;
    int c = 0;

    auto operator<=>(const DegreeTriple&) const = default;

    /// this <= other componentwise.
    bool precedes(const DegreeTriple& other) const {
        return a <= other.a && b <= other.b && c <= other.c;
    }
    int operator[](int f) const { return f == 0 ? a : (f == 1 ? b : c); }
    std::string to_string() const;  // "(a,b,c)"
};

/// Sorted, duplicate-free.
using DegreeSet = std::vector<DegreeTriple>;

/// Minimal elements of s under the componentwise order.
DegreeSet minimal_elements(DegreeSet s);

/// Dense array over [0..box.a] x [0..box.b] x [0..box.c], row-major.
class Grid3 {
public:
    Grid3() = default;
    explicit Grid3(DegreeTriple box, std::int64_t fill = 0);

    const DegreeTriple& box() const noexcept { return box_; }
    std::int64_t& at(int i, int j, int k) { return data_[offset(i, j, k)]; }
    std::int64_t at(int i, int j, int k) const { return data_[offset(i, j, k)]; }
    const std::vector<std::int64_t>& data() const noexcept { return data_; }

    bool operator==(const Grid3&) const = default;

private:
    std::size_t offset(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * (box_.b + 1) + j) * (box_.c + 1) + k;
    }

    DegreeTriple box_;
    std::vector<std::int64_t> data_;
};

/// Triple prefix sum; inverts first_difference.
Grid3 prefix_sum(const Grid3& g);
/// Delta H(i,j,k) = sum over (l,m,n) in {0,1}^3 of (-1)^(l+m+n) H(i-l,j-m,k-n).
Grid3 first_difference(const Grid3& g);

/// Row-count partition of a cell set, weakly decreasing, zero rows dropped.
std::vector<int> row_partition(const CellSet& u);

/// True iff (r,c) in U implies (r',c') in U for all r' <= r, c' <= c.
bool is_literal_ferrers(const CellSet& u);

struct FerrersSlice {
    bool resembles = true;  // Ferrers after relabeling rows and columns
    bool literal = true;    // Ferrers in the given labels
    std::vector<int> partition;
};

FerrersSlice resembles_ferrers(const VarietyOfLines& x, Direction h);

struct FerrersVarietyResult {
    bool ferrers = false;
    /// One permutation per family making U1, U2, U3 literal Ferrers.
    std::optional<Relabeling> relabeling;
};

/// Exact decision. Each family is ordered by the sizes of its rows in the
/// two index sets it meets, largest first; X is Ferrers iff that order
/// makes all three sets literal Ferrers.
FerrersVarietyResult is_ferrers_variety(const VarietyOfLines& x);

/// Degrees of the minimal generators of the ideal of the P1 x P1 point set
/// whose diagram is the partition lambda. Empty partition gives {(0,0)}.
std::vector<std::pair<int, int>> points_generator_degrees(const std::vector<int>& lambda);

struct DegreeSets {
    DegreeSet d1, d2, d3, d, dhat;
};

/// D_1, D_2, D_3, D and its minimal elements. Throws NotFerrers.
DegreeSets degree_sets(const VarietyOfLines& x);

/// Generator degrees D-hat(X) together with the labelling they refer to:
/// (a,b,c) stands for the product of the first a, b, c hyperplanes of each
/// family in the relabeled variety.
struct GeneratorSet {
    DegreeSet degrees;
    Relabeling relabeling;

    /// Product of original hyperplane names, e.g. "A1*A2*B1"; "1" for (0,0,0).
    std::string product(const DegreeTriple& t) const;
    std::vector<std::string> products() const;
};

GeneratorSet minimal_generators(const VarietyOfLines& x);

/// 0/1 array: 0 iff some element of D-hat(X) precedes (i,j,k).
Grid3 delta_hilbert(const VarietyOfLines& x, DegreeTriple box);
Grid3 hilbert_function(const VarietyOfLines& x, DegreeTriple box);

struct CompleteIntersection {
    DegreeTriple f1;  // a * e_i
    DegreeTriple f2;  // zero in coordinate i
};

std::optional<CompleteIntersection> detect_complete_intersection(const VarietyOfLines& x);

/// 0 -> R^2(-a,-b,-c) -> R(-a,-b,0) + R(-a,0,-c) + R(0,-b,-c) -> I -> 0
/// for the grid of the box [a] x [b] x [c].
struct GridResolution {
    int a = 0, b = 0, c = 0;
    std::array<DegreeTriple, 3> generators;  // F0 twists (negated)
    std::array<DegreeTriple, 2> syzygies;    // F1 twists (negated)
    /// 3 x 2 Hilbert-Burch matrix with entries "A1*...*Aa", "0", ...
    std::array<std::array<std::string, 2>, 3> hilbert_burch;

    std::string to_string() const;
    /// Hilbert function read off the twists by inclusion-exclusion.
    std::int64_t hilbert(int i, int j, int k) const;
};

GridResolution grid_resolution(int a, int b, int c);

/// X' with each U_h replaced by the left-justified diagram of its row
/// partition. Throws NotAcm unless X is ACM.
VarietyOfLines ferrers_companion(const VarietyOfLines& x);

}  // namespace acmlines
