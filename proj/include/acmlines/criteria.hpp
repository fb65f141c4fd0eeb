#pragma once

#include <acmlines/graph.hpp>
#include <acmlines/variety.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace acmlines {

/// mu(i,j,k) = number of lines of X through P_ijk, together with the three
/// 0/1 incidence matrices M^(3) (d1 x d2), M^(2) (d1 x d3), M^(1) (d2 x d3).
/// All accessors are 1-based.
class MultiplicityTensor {
public:
    explicit MultiplicityTensor(const VarietyOfLines& x);

    const Dims& d() const noexcept { return d_; }
    int mu(int i, int j, int k) const { return mu_[offset(i, j, k)]; }
    int m3(int i, int j) const { return m3_[(i - 1) * d_[1] + (j - 1)]; }
    int m2(int i, int k) const { return m2_[(i - 1) * d_[2] + (k - 1)]; }
    int m1(int j, int k) const { return m1_[(j - 1) * d_[2] + (k - 1)]; }

    /// Matrix M^(h) as rows of 0/1 entries.
    std::vector<std::vector<int>> slice_matrix(Direction h) const;
    /// Entry of M^(h) with (row, col) in the direction's family order.
    int slice(Direction h, int row, int col) const;

private:
    std::size_t offset(int i, int j, int k) const {
        return (static_cast<std::size_t>(i - 1) * d_[1] + (j - 1)) * d_[2] + (k - 1);
    }

    Dims d_;
    std::vector<int> mu_;
    std::vector<int> m3_;
    std::vector<int> m2_;
    std::vector<int> m1_;
};

inline MultiplicityTensor multiplicity_tensor(const VarietyOfLines& x) { return MultiplicityTensor(x); }

/// A cyclically ordered tuple (H_1..H_n) violating Hyp_n(*): every
/// non-adjacent pair spans a line of X, no adjacent pair does.
struct HypWitness {
    std::vector<HyperplaneId> tuple;
    std::string to_string() const;
};

struct HypResult {
    bool holds = true;
    std::optional<HypWitness> witness;
};

/// Hyp_n(*) by direct enumeration of hyperplane tuples up to rotation and
/// reflection. n must be 4, 5 or 6 (BadN otherwise).
HypResult has_hyp_star(const VarietyOfLines& x, int n);

/// Same enumeration for any n >= 4; used to spot-check that n > 6 is
/// always satisfied.
HypResult enumerate_hyp_star(const VarietyOfLines& x, int n);

/// Location of a forbidden multiplicity pattern. condition 1..3 are the
/// conditions of the Hyp_4 / Hyp_5 criteria (0 for Hyp_6); condition 0 with
/// `slice` set is the 2x2 permutation pattern inside M^(slice) that
/// prevents that slice from resembling a Ferrers diagram. Unused indices
/// are 0.
struct NumericWitness {
    int n = 0;
    int condition = 0;
    std::optional<Direction> slice;
    int a1 = 0, a2 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0;
    std::string to_string() const;
};

struct NumericResult {
    bool holds = true;
    std::optional<NumericWitness> witness;
};

NumericResult criterion_hyp6_numeric(const MultiplicityTensor& m);
NumericResult criterion_hyp5_numeric(const MultiplicityTensor& m);
/// Conditions 1-3 on mu, plus the same-family 4-cycles (two rows, two
/// columns of one M^(h)) that the three conditions do not see.
NumericResult criterion_hyp4_numeric(const MultiplicityTensor& m);

struct RouteVerdicts {
    bool chordal = true;
    std::array<bool, 3> hyp{true, true, true};      // n = 4, 5, 6
    std::array<bool, 3> numeric{true, true, true};  // n = 4, 5, 6

    bool hyp_all() const { return hyp[0] && hyp[1] && hyp[2]; }
    bool numeric_all() const { return numeric[0] && numeric[1] && numeric[2]; }
    bool unanimous() const;
};

struct AcmVerdict {
    bool is_acm = true;
    std::optional<int> failing_n;
    std::optional<CycleWitness> cycle;
    std::optional<HypWitness> hyp_witness;
    std::optional<NumericWitness> numeric_witness;
    RouteVerdicts routes;
};

/// Thrown by is_acm() when the three routes disagree. This is an
/// implementation bug, never a property of the input.
class CriteriaDisagreement : public Error {
public:
    explicit CriteriaDisagreement(AcmVerdict verdict);
    const AcmVerdict& verdict() const noexcept { return verdict_; }

private:
    AcmVerdict verdict_;
};

/// Evaluates all three routes without throwing.
AcmVerdict evaluate_routes(const VarietyOfLines& x);

/// Consensus verdict: chordality of G_X^c, Hyp_4/5/6 enumeration and the
/// numeric criteria. Throws CriteriaDisagreement unless they agree.
AcmVerdict is_acm(const VarietyOfLines& x);

}  // namespace acmlines
