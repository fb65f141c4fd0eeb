#pragma once

#include <acmlines/errors.hpp>

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace acmlines {

/// Hyperplane family. A hyperplanes have degree e1, B degree e2, C degree e3.
enum class Family : int { A = 0, B = 1, C = 2 };

/// Direction h of a line: the factor of P1 x P1 x P1 along which the line
/// is free. Lines of direction 3 are cut out by A_i, B_j; direction 2 by
/// A_i, C_k; direction 1 by B_j, C_k.
enum class Direction : int { One = 1, Two = 2, Three = 3 };

inline constexpr std::array<Direction, 3> kAllDirections{Direction::One, Direction::Two,
                                                         Direction::Three};
inline constexpr std::array<Family, 3> kAllFamilies{Family::A, Family::B, Family::C};

inline int family_index(Family f) { return static_cast<int>(f); }
inline int direction_index(Direction h) { return static_cast<int>(h); }
Direction direction_from_int(int h);

/// The two families whose hyperplanes cut out lines of direction h,
/// in (row, column) order: h=3 -> (A,B), h=2 -> (A,C), h=1 -> (B,C).
std::array<Family, 2> direction_families(Direction h);

char family_letter(Family f);

struct HyperplaneId {
    Family family;
    int index;  // 1-based

    auto operator<=>(const HyperplaneId&) const = default;
    std::string name() const;  // "A3", "C1", ...
};

/// An index pair inside one of the grids U_h; 1-based.
struct Cell {
    int row;
    int col;

    auto operator<=>(const Cell&) const = default;
};

struct Line {
    Direction direction;
    Cell cell;

    auto operator<=>(const Line&) const = default;
    std::array<HyperplaneId, 2> hyperplanes() const;
    std::string name() const;  // "L(A1,B2)"
};

/// Point P_ijk = L(A_i) n L(B_j) n L(C_k); 1-based.
struct PointTriple {
    int i;
    int j;
    int k;

    auto operator<=>(const PointTriple&) const = default;
};

using Dims = std::array<int, 3>;
using CellSet = std::set<Cell>;

/// A finite union of distinct lines, stored as the three index sets
/// U1, U2, U3 over hyperplane counts (d1, d2, d3). Immutable.
///
/// The constructor checks bounds only; hyperplane indices that support no
/// line are allowed here (see validate() for the strict check and
/// compact() for renumbering).
class VarietyOfLines {
public:
    VarietyOfLines() = default;
    VarietyOfLines(Dims d, CellSet u3, CellSet u2, CellSet u1);

    const Dims& d() const noexcept { return d_; }
    int d(Family f) const { return d_[family_index(f)]; }

    /// U_h(X).
    const CellSet& index_set(Direction h) const;
    const CellSet& u1() const noexcept { return u1_; }
    const CellSet& u2() const noexcept { return u2_; }
    const CellSet& u3() const noexcept { return u3_; }

    std::size_t line_count() const noexcept { return u1_.size() + u2_.size() + u3_.size(); }
    bool empty() const noexcept { return line_count() == 0; }

    bool contains(const Line& line) const;
    /// True iff L(h1, h2) is a line of X. Same-family pairs never are.
    bool has_line(const HyperplaneId& h1, const HyperplaneId& h2) const;

    /// All lines, ordered by direction 1, 2, 3 then by cell.
    std::vector<Line> lines() const;
    std::vector<HyperplaneId> hyperplanes() const;

    /// Number of lines of X lying on the hyperplane.
    std::size_t lines_on(const HyperplaneId& h) const;

    bool operator==(const VarietyOfLines&) const = default;

private:
    Dims d_{0, 0, 0};
    CellSet u3_;
    CellSet u2_;
    CellSet u1_;
};

/// Unchecked input as it arrives from JSON or a caller.
struct RawVariety {
    Dims d{0, 0, 0};
    std::vector<Cell> u3;
    std::vector<Cell> u2;
    std::vector<Cell> u1;
};

enum class ValidationMode { Strict, Lenient };

struct Violation {
    ErrorCode code;
    std::string message;
    bool warning = false;
};

struct ValidationResult {
    std::optional<VarietyOfLines> variety;
    std::vector<Violation> violations;

    bool ok() const noexcept { return variety.has_value(); }
    std::string summary() const;
};

/// Checks bounds, duplicates and (in strict mode) unused hyperplane
/// indices. Unused indices are warnings in lenient mode.
ValidationResult validate(const RawVariety& raw, ValidationMode mode = ValidationMode::Strict);

/// Like validate() but throws the first error.
VarietyOfLines make_variety(const RawVariety& raw, ValidationMode mode = ValidationMode::Strict);

/// Hyperplane indices that support no line of X.
std::vector<HyperplaneId> unused_hyperplanes(const VarietyOfLines& x);

/// Order-preserving renumbering that drops unused hyperplane indices.
VarietyOfLines compact(const VarietyOfLines& x);

/// X_h: the lines of direction h, with d unchanged.
VarietyOfLines direction_slice(const VarietyOfLines& x, Direction h);

/// Grid of lines X_Y: every line through some point of Y.
VarietyOfLines grid_from_points(const std::vector<PointTriple>& points);

/// The full grid X_C of the complete intersection box [a] x [b] x [c].
VarietyOfLines box_grid(int a, int b, int c);

/// Lines of X not contained in H, compacted.
VarietyOfLines remove_hyperplane(const VarietyOfLines& x, const HyperplaneId& h);

/// perms[f][old - 1] = new label (1-based) for family f.
using Relabeling = std::array<std::vector<int>, 3>;

Relabeling identity_relabeling(const Dims& d);
Relabeling inverse(const Relabeling& perms);
VarietyOfLines relabel(const VarietyOfLines& x, const Relabeling& perms);

/// Marker grid for direction h: rows are the first family of the
/// direction, columns the second; "●" marks a line, "·" its absence.
std::string render(const VarietyOfLines& x, Direction h);

}  // namespace acmlines
