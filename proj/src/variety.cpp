#include <acmlines/variety.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace acmlines {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfBounds: return "OutOfBounds";
        case ErrorCode::DuplicateLine: return "DuplicateLine";
        case ErrorCode::UnusedHyperplane: return "UnusedHyperplane";
        case ErrorCode::EmptyPointSet: return "EmptyPointSet";
        case ErrorCode::UnknownHyperplane: return "UnknownHyperplane";
        case ErrorCode::BadPermutation: return "BadPermutation";
        case ErrorCode::BadN: return "BadN";
        case ErrorCode::CriteriaDisagreement: return "CriteriaDisagreement";
        case ErrorCode::NotFerrers: return "NotFerrers";
        case ErrorCode::NotAcm: return "NotAcm";
        case ErrorCode::EmptyVariety: return "EmptyVariety";
        case ErrorCode::SizeLimit: return "SizeLimit";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Direction direction_from_int(int h) {
    if (h < 1 || h > 3) {
        throw Error(ErrorCode::OutOfBounds, "direction must be 1, 2 or 3, got " + std::to_string(h));
    }
    return static_cast<Direction>(h);
}

std::array<Family, 2> direction_families(Direction h) {
    switch (h) {
        case Direction::Three: return {Family::A, Family::B};
        case Direction::Two: return {Family::A, Family::C};
        case Direction::One: return {Family::B, Family::C};
    }
    return {Family::A, Family::B};
}

char family_letter(Family f) { return "ABC"[family_index(f)]; }

std::string HyperplaneId::name() const { return family_letter(family) + std::to_string(index); }

std::array<HyperplaneId, 2> Line::hyperplanes() const {
    auto fams = direction_families(direction);
    return {HyperplaneId{fams[0], cell.row}, HyperplaneId{fams[1], cell.col}};
}

std::string Line::name() const {
    auto hs = hyperplanes();
    return "L(" + hs[0].name() + "," + hs[1].name() + ")";
}

namespace {

bool cell_in_bounds(const Dims& d, Direction h, const Cell& c) {
    auto fams = direction_families(h);
    return c.row >= 1 && c.col >= 1 && c.row <= d[family_index(fams[0])] &&
           c.col <= d[family_index(fams[1])];
}

Direction direction_between(Family f1, Family f2) {
    // The direction is the family not involved.
    int missing = 3 - family_index(f1) - family_index(f2);
    return static_cast<Direction>(missing + 1);
}

}  // namespace

VarietyOfLines::VarietyOfLines(Dims d, CellSet u3, CellSet u2, CellSet u1)
    : d_(d), u3_(std::move(u3)), u2_(std::move(u2)), u1_(std::move(u1)) {
    for (int f = 0; f < 3; ++f) {
        if (d_[f] < 0) throw Error(ErrorCode::OutOfBounds, "negative hyperplane count");
    }
    for (Direction h : kAllDirections) {
        for (const Cell& c : index_set(h)) {
            if (!cell_in_bounds(d_, h, c)) {
                throw Error(ErrorCode::OutOfBounds,
                            "pair (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                ") out of bounds in U" + std::to_string(direction_index(h)));
            }
        }
    }
}

const CellSet& VarietyOfLines::index_set(Direction h) const {
    switch (h) {
        case Direction::One: return u1_;
        case Direction::Two: return u2_;
        case Direction::Three: return u3_;
    }
    return u3_;
}

bool VarietyOfLines::contains(const Line& line) const {
    return index_set(line.direction).contains(line.cell);
}

bool VarietyOfLines::has_line(const HyperplaneId& h1, const HyperplaneId& h2) const {
    if (h1.family == h2.family) return false;
    const auto& lo = h1.family < h2.family ? h1 : h2;
    const auto& hi = h1.family < h2.family ? h2 : h1;
    Direction h = direction_between(lo.family, hi.family);
    return index_set(h).contains(Cell{lo.index, hi.index});
}

std::vector<Line> VarietyOfLines::lines() const {
    std::vector<Line> out;
    out.reserve(line_count());
    for (Direction h : kAllDirections) {
        for (const Cell& c : index_set(h)) out.push_back(Line{h, c});
    }
    return out;
}

std::vector<HyperplaneId> VarietyOfLines::hyperplanes() const {
    std::vector<HyperplaneId> out;
    for (Family f : kAllFamilies) {
        for (int i = 1; i <= d(f); ++i) out.push_back(HyperplaneId{f, i});
    }
    return out;
}

std::size_t VarietyOfLines::lines_on(const HyperplaneId& hp) const {
    std::size_t n = 0;
    for (const Line& l : lines()) {
        auto hs = l.hyperplanes();
        if (hs[0] == hp || hs[1] == hp) ++n;
    }
    return n;
}

std::string ValidationResult::summary() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << (v.warning ? "warning: " : "error: ") << to_string(v.code) << ": " << v.message
           << "\n";
    }
    return os.str();
}

std::vector<HyperplaneId> unused_hyperplanes(const VarietyOfLines& x) {
    std::array<std::vector<bool>, 3> used;
    for (Family f : kAllFamilies) used[family_index(f)].assign(x.d(f) + 1, false);
    for (const Line& l : x.lines()) {
        for (const auto& hp : l.hyperplanes()) used[family_index(hp.family)][hp.index] = true;
    }
    std::vector<HyperplaneId> out;
    for (Family f : kAllFamilies) {
        for (int i = 1; i <= x.d(f); ++i) {
            if (!used[family_index(f)][i]) out.push_back(HyperplaneId{f, i});
        }
    }
    return out;
}

ValidationResult validate(const RawVariety& raw, ValidationMode mode) {
    ValidationResult result;
    for (int f = 0; f < 3; ++f) {
        if (raw.d[f] < 0) {
            result.violations.push_back(
                {ErrorCode::OutOfBounds, "d" + std::to_string(f + 1) + " is negative", false});
        }
    }
    if (!result.violations.empty()) return result;

    std::array<CellSet, 3> sets;  // indexed by direction - 1
    auto ingest = [&](Direction h, const std::vector<Cell>& cells) {
        auto& set = sets[direction_index(h) - 1];
        for (const Cell& c : cells) {
            Line line{h, c};
            if (!cell_in_bounds(raw.d, h, c)) {
                result.violations.push_back(
                    {ErrorCode::OutOfBounds,
                     "U" + std::to_string(direction_index(h)) + " pair (" +
                         std::to_string(c.row) + "," + std::to_string(c.col) + ") out of bounds",
                     false});
                continue;
            }
            if (!set.insert(c).second) {
                result.violations.push_back(
                    {ErrorCode::DuplicateLine, "duplicate line " + line.name(), false});
            }
        }
    };
    ingest(Direction::Three, raw.u3);
    ingest(Direction::Two, raw.u2);
    ingest(Direction::One, raw.u1);

    bool has_error = std::any_of(result.violations.begin(), result.violations.end(),
                                 [](const Violation& v) { return !v.warning; });
    if (has_error) return result;

    VarietyOfLines x(raw.d, std::move(sets[2]), std::move(sets[1]), std::move(sets[0]));
    for (const auto& hp : unused_hyperplanes(x)) {
        result.violations.push_back({ErrorCode::UnusedHyperplane,
                                     "hyperplane " + hp.name() + " contains no line of X",
                                     mode == ValidationMode::Lenient});
    }
    if (mode == ValidationMode::Strict && !result.violations.empty()) return result;
    result.variety = std::move(x);
    return result;
}

VarietyOfLines make_variety(const RawVariety& raw, ValidationMode mode) {
    auto result = validate(raw, mode);
    if (!result.ok()) {
        for (const auto& v : result.violations) {
            if (!v.warning) throw Error(v.code, v.message);
        }
    }
    return *std::move(result.variety);
}

namespace {

VarietyOfLines remap(const VarietyOfLines& x, const std::array<std::vector<int>, 3>& to,
                     const Dims& new_d) {
    std::array<CellSet, 3> sets;
    for (Direction h : kAllDirections) {
        auto fams = direction_families(h);
        auto& out = sets[direction_index(h) - 1];
        for (const Cell& c : x.index_set(h)) {
            int r = to[family_index(fams[0])][c.row];
            int s = to[family_index(fams[1])][c.col];
            if (r > 0 && s > 0) out.insert(Cell{r, s});
        }
    }
    return VarietyOfLines(new_d, std::move(sets[2]), std::move(sets[1]), std::move(sets[0]));
}

}  // namespace

VarietyOfLines compact(const VarietyOfLines& x) {
    std::array<std::vector<int>, 3> to;
    Dims new_d{0, 0, 0};
    auto unused = unused_hyperplanes(x);
    for (Family f : kAllFamilies) {
        int fi = family_index(f);
        to[fi].assign(x.d(f) + 1, 0);
        for (int i = 1; i <= x.d(f); ++i) {
            bool gone = std::find(unused.begin(), unused.end(), HyperplaneId{f, i}) != unused.end();
            if (!gone) to[fi][i] = ++new_d[fi];
        }
    }
    return remap(x, to, new_d);
}

VarietyOfLines direction_slice(const VarietyOfLines& x, Direction h) {
    CellSet empty;
    switch (h) {
        case Direction::Three: return VarietyOfLines(x.d(), x.u3(), empty, empty);
        case Direction::Two: return VarietyOfLines(x.d(), empty, x.u2(), empty);
        case Direction::One: return VarietyOfLines(x.d(), empty, empty, x.u1());
    }
    return x;
}

VarietyOfLines grid_from_points(const std::vector<PointTriple>& points) {
    if (points.empty()) throw Error(ErrorCode::EmptyPointSet, "grid of an empty point set");
    Dims d{0, 0, 0};
    CellSet u3, u2, u1;
    for (const auto& p : points) {
        if (p.i < 1 || p.j < 1 || p.k < 1) {
            throw Error(ErrorCode::OutOfBounds, "point indices are 1-based");
        }
        d[0] = std::max(d[0], p.i);
        d[1] = std::max(d[1], p.j);
        d[2] = std::max(d[2], p.k);
        u3.insert({p.i, p.j});
        u2.insert({p.i, p.k});
        u1.insert({p.j, p.k});
    }
    return VarietyOfLines(d, std::move(u3), std::move(u2), std::move(u1));
}

VarietyOfLines box_grid(int a, int b, int c) {
    std::vector<PointTriple> pts;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) pts.push_back({i, j, k});
    return grid_from_points(pts);
}

VarietyOfLines remove_hyperplane(const VarietyOfLines& x, const HyperplaneId& h) {
    if (h.index < 1 || h.index > x.d(h.family) || x.lines_on(h) == 0) {
        throw Error(ErrorCode::UnknownHyperplane, h.name() + " supports no line of X");
    }
    std::array<CellSet, 3> sets;
    for (const Line& l : x.lines()) {
        auto hs = l.hyperplanes();
        if (hs[0] == h || hs[1] == h) continue;
        sets[direction_index(l.direction) - 1].insert(l.cell);
    }
    return compact(VarietyOfLines(x.d(), std::move(sets[2]), std::move(sets[1]), std::move(sets[0])));
}

Relabeling identity_relabeling(const Dims& d) {
    Relabeling r;
    for (int f = 0; f < 3; ++f) {
        r[f].resize(d[f]);
        for (int i = 0; i < d[f]; ++i) r[f][i] = i + 1;
    }
    return r;
}

namespace {

void check_permutation(const std::vector<int>& p, int n, Family f) {
    if (static_cast<int>(p.size()) != n) {
        throw Error(ErrorCode::BadPermutation, std::string("family ") + family_letter(f) +
                                                   ": expected a permutation of 1.." +
                                                   std::to_string(n));
    }
    std::vector<bool> seen(n + 1, false);
    for (int v : p) {
        if (v < 1 || v > n || seen[v]) {
            throw Error(ErrorCode::BadPermutation,
                        std::string("family ") + family_letter(f) + ": not a permutation");
        }
        seen[v] = true;
    }
}

}  // namespace

Relabeling inverse(const Relabeling& perms) {
    Relabeling inv;
    for (int f = 0; f < 3; ++f) {
        inv[f].resize(perms[f].size());
        for (std::size_t i = 0; i < perms[f].size(); ++i) {
            inv[f][perms[f][i] - 1] = static_cast<int>(i) + 1;
        }
    }
    return inv;
}

VarietyOfLines relabel(const VarietyOfLines& x, const Relabeling& perms) {
    std::array<std::vector<int>, 3> to;
    for (Family f : kAllFamilies) {
        int fi = family_index(f);
        check_permutation(perms[fi], x.d(f), f);
        to[fi].assign(x.d(f) + 1, 0);
        for (int i = 1; i <= x.d(f); ++i) to[fi][i] = perms[fi][i - 1];
    }
    return remap(x, to, x.d());
}

std::string render(const VarietyOfLines& x, Direction h) {
    auto fams = direction_families(h);
    int rows = x.d(fams[0]);
    int cols = x.d(fams[1]);
    const auto& set = x.index_set(h);
    std::string out;
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            if (c > 1) out += ' ';
            out += set.contains(Cell{r, c}) ? "●" : "·";
        }
        out += '\n';
    }
    return out;
}

}  // namespace acmlines
