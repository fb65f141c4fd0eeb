#include <acmlines/ferrers.hpp>

#include <acmlines/criteria.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace acmlines {

std::string DegreeTriple::to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

DegreeSet minimal_elements(DegreeSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    DegreeSet out;
    for (const auto& t : s) {
        bool dominated = std::any_of(s.begin(), s.end(), [&](const DegreeTriple& u) {
            return u != t && u.precedes(t);
        });
        if (!dominated) out.push_back(t);
    }
    return out;
}

Grid3::Grid3(DegreeTriple box, std::int64_t fill)
    : box_(box),
      data_(static_cast<std::size_t>(box.a + 1) * (box.b + 1) * (box.c + 1), fill) {}

Grid3 prefix_sum(const Grid3& g) {
    Grid3 h = g;
    const auto& b = g.box();
    for (int i = 0; i <= b.a; ++i)
        for (int j = 0; j <= b.b; ++j)
            for (int k = 1; k <= b.c; ++k) h.at(i, j, k) += h.at(i, j, k - 1);
    for (int i = 0; i <= b.a; ++i)
        for (int j = 1; j <= b.b; ++j)
            for (int k = 0; k <= b.c; ++k) h.at(i, j, k) += h.at(i, j - 1, k);
    for (int i = 1; i <= b.a; ++i)
        for (int j = 0; j <= b.b; ++j)
            for (int k = 0; k <= b.c; ++k) h.at(i, j, k) += h.at(i - 1, j, k);
    return h;
}

Grid3 first_difference(const Grid3& g) {
    Grid3 d(g.box());
    const auto& b = g.box();
    auto get = [&](int i, int j, int k) -> std::int64_t {
        return (i < 0 || j < 0 || k < 0) ? 0 : g.at(i, j, k);
    };
    for (int i = 0; i <= b.a; ++i)
        for (int j = 0; j <= b.b; ++j)
            for (int k = 0; k <= b.c; ++k) {
                std::int64_t s = 0;
                for (int l = 0; l < 2; ++l)
                    for (int m = 0; m < 2; ++m)
                        for (int n = 0; n < 2; ++n) {
                            std::int64_t v = get(i - l, j - m, k - n);
                            s += ((l + m + n) % 2 == 0) ? v : -v;
                        }
                d.at(i, j, k) = s;
            }
    return d;
}

std::vector<int> row_partition(const CellSet& u) {
    std::map<int, int> counts;
    for (const Cell& c : u) ++counts[c.row];
    std::vector<int> lambda;
    for (auto [r, n] : counts) lambda.push_back(n);
    std::sort(lambda.rbegin(), lambda.rend());
    return lambda;
}

bool is_literal_ferrers(const CellSet& u) {
    for (const Cell& c : u) {
        if (c.row > 1 && !u.contains({c.row - 1, c.col})) return false;
        if (c.col > 1 && !u.contains({c.row, c.col - 1})) return false;
    }
    return true;
}

namespace {

// Order 1..n by decreasing key, ties by index; returns perm[old-1] = new.
template <typename Key>
std::vector<int> ranking(int n, Key key) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return key(x) > key(y); });
    std::vector<int> perm(n);
    for (int pos = 0; pos < n; ++pos) perm[order[pos] - 1] = pos + 1;
    return perm;
}

std::vector<int> row_sizes(const CellSet& u, int n) {
    std::vector<int> s(n + 1, 0);
    for (const Cell& c : u) ++s[c.row];
    return s;
}

std::vector<int> col_sizes(const CellSet& u, int n) {
    std::vector<int> s(n + 1, 0);
    for (const Cell& c : u) ++s[c.col];
    return s;
}

CellSet permute(const CellSet& u, const std::vector<int>& rows, const std::vector<int>& cols) {
    CellSet out;
    for (const Cell& c : u) out.insert({rows[c.row - 1], cols[c.col - 1]});
    return out;
}

}  // namespace

FerrersSlice resembles_ferrers(const VarietyOfLines& x, Direction h) {
    const CellSet& u = x.index_set(h);
    auto [fr, fc] = direction_families(h);
    int nr = x.d(fr);
    int nc = x.d(fc);
    auto rs = row_sizes(u, nr);
    auto cs = col_sizes(u, nc);
    auto rp = ranking(nr, [&](int i) { return rs[i]; });
    auto cp = ranking(nc, [&](int j) { return cs[j]; });

    FerrersSlice out;
    out.partition = row_partition(u);
    out.literal = is_literal_ferrers(u);
    out.resembles = is_literal_ferrers(permute(u, rp, cp));
    return out;
}

FerrersVarietyResult is_ferrers_variety(const VarietyOfLines& x) {
    const Dims& d = x.d();
    // Each family meets two index sets: A rows of U3 and U2, B columns of
    // U3 and rows of U1, C columns of U2 and U1.
    auto a3 = row_sizes(x.u3(), d[0]);
    auto a2 = row_sizes(x.u2(), d[0]);
    auto b3 = col_sizes(x.u3(), d[1]);
    auto b1 = row_sizes(x.u1(), d[1]);
    auto c2 = col_sizes(x.u2(), d[2]);
    auto c1 = col_sizes(x.u1(), d[2]);

    Relabeling perms;
    perms[0] = ranking(d[0], [&](int i) { return std::pair{a3[i], a2[i]}; });
    perms[1] = ranking(d[1], [&](int j) { return std::pair{b3[j], b1[j]}; });
    perms[2] = ranking(d[2], [&](int k) { return std::pair{c2[k], c1[k]}; });

    VarietyOfLines y = relabel(x, perms);
    FerrersVarietyResult out;
    out.ferrers = is_literal_ferrers(y.u3()) && is_literal_ferrers(y.u2()) &&
                  is_literal_ferrers(y.u1());
    if (out.ferrers) out.relabeling = perms;
    return out;
}

std::vector<std::pair<int, int>> points_generator_degrees(const std::vector<int>& lambda) {
    if (lambda.empty()) return {{0, 0}};
    int r = static_cast<int>(lambda.size());
    std::vector<std::pair<int, int>> out{{0, lambda[0]}};
    for (int i = 1; i < r; ++i) {
        if (lambda[i] < lambda[i - 1]) out.emplace_back(i, lambda[i]);
    }
    out.emplace_back(r, 0);
    return out;
}

namespace {

struct Normalized {
    VarietyOfLines y;
    Relabeling perms;
};

Normalized normalize(const VarietyOfLines& x) {
    auto fr = is_ferrers_variety(x);
    if (!fr.ferrers) throw Error(ErrorCode::NotFerrers, "index sets admit no common Ferrers labelling");
    return {relabel(x, *fr.relabeling), *fr.relabeling};
}

DegreeSet embed(const CellSet& u, int zero_slot) {
    DegreeSet out;
    for (auto [p, q] : points_generator_degrees(row_partition(u))) {
        if (zero_slot == 2) out.push_back({p, q, 0});
        if (zero_slot == 1) out.push_back({p, 0, q});
        if (zero_slot == 0) out.push_back({0, p, q});
    }
    std::sort(out.begin(), out.end());
    return out;
}

DegreeSets sets_of(const VarietyOfLines& y) {
    DegreeSets s;
    s.d3 = embed(y.u3(), 2);
    s.d2 = embed(y.u2(), 1);
    s.d1 = embed(y.u1(), 0);
    for (const auto& t3 : s.d3)
        for (const auto& t2 : s.d2)
            for (const auto& t1 : s.d1) {
                s.d.push_back({std::max(t3.a, t2.a), std::max(t3.b, t1.b), std::max(t1.c, t2.c)});
            }
    std::sort(s.d.begin(), s.d.end());
    s.d.erase(std::unique(s.d.begin(), s.d.end()), s.d.end());
    s.dhat = minimal_elements(s.d);
    return s;
}

}  // namespace

DegreeSets degree_sets(const VarietyOfLines& x) { return sets_of(normalize(x).y); }

std::string GeneratorSet::product(const DegreeTriple& t) const {
    std::string s;
    for (Family f : kAllFamilies) {
        const auto& perm = relabeling[family_index(f)];
        int upto = t[family_index(f)];
        // Original indices whose new label is <= upto.
        std::vector<int> olds;
        for (std::size_t old = 0; old < perm.size(); ++old) {
            if (perm[old] <= upto) olds.push_back(static_cast<int>(old) + 1);
        }
        for (int o : olds) {
            if (!s.empty()) s += "*";
            s += family_letter(f) + std::to_string(o);
        }
    }
    return s.empty() ? "1" : s;
}

std::vector<std::string> GeneratorSet::products() const {
    std::vector<std::string> out;
    for (const auto& t : degrees) out.push_back(product(t));
    return out;
}

GeneratorSet minimal_generators(const VarietyOfLines& x) {
    auto n = normalize(x);
    return {sets_of(n.y).dhat, n.perms};
}

Grid3 delta_hilbert(const VarietyOfLines& x, DegreeTriple box) {
    DegreeSet dhat = degree_sets(x).dhat;
    Grid3 g(box);
    for (int i = 0; i <= box.a; ++i)
        for (int j = 0; j <= box.b; ++j)
            for (int k = 0; k <= box.c; ++k) {
                DegreeTriple p{i, j, k};
                bool in = std::any_of(dhat.begin(), dhat.end(),
                                      [&](const DegreeTriple& t) { return t.precedes(p); });
                g.at(i, j, k) = in ? 0 : 1;
            }
    return g;
}

Grid3 hilbert_function(const VarietyOfLines& x, DegreeTriple box) {
    return prefix_sum(delta_hilbert(x, box));
}

std::optional<CompleteIntersection> detect_complete_intersection(const VarietyOfLines& x) {
    if (x.empty() || !is_ferrers_variety(x).ferrers) return std::nullopt;
    DegreeSet dhat = degree_sets(x).dhat;
    if (dhat.size() != 2) return std::nullopt;
    auto support = [](const DegreeTriple& t) {
        int n = 0;
        for (int f = 0; f < 3; ++f) n += t[f] > 0;
        return n;
    };
    for (int pick = 0; pick < 2; ++pick) {
        const DegreeTriple& pure = dhat[pick];
        const DegreeTriple& other = dhat[1 - pick];
        if (support(pure) != 1) continue;
        int i = pure.a > 0 ? 0 : (pure.b > 0 ? 1 : 2);
        if (other[i] != 0 || support(other) == 0) continue;
        return CompleteIntersection{pure, other};
    }
    return std::nullopt;
}

namespace {

std::string product_of(Family f, int n) {
    std::string s;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) s += "*";
        s += family_letter(f) + std::to_string(i);
    }
    return s;
}

std::int64_t r3(int u, int v, int w) {
    if (u < 0 || v < 0 || w < 0) return 0;
    return static_cast<std::int64_t>(u + 1) * (v + 1) * (w + 1);
}

std::string twist(const DegreeTriple& t) {
    return "(" + std::to_string(-t.a) + "," + std::to_string(-t.b) + "," + std::to_string(-t.c) + ")";
}

}  // namespace

GridResolution grid_resolution(int a, int b, int c) {
    GridResolution r;
    r.a = a;
    r.b = b;
    r.c = c;
    r.generators = {DegreeTriple{a, b, 0}, DegreeTriple{a, 0, c}, DegreeTriple{0, b, c}};
    r.syzygies = {DegreeTriple{a, b, c}, DegreeTriple{a, b, c}};
    std::string pa = product_of(Family::A, a);
    r.hilbert_burch = {{{pa, pa}, {product_of(Family::B, b), "0"}, {"0", product_of(Family::C, c)}}};
    return r;
}

std::string GridResolution::to_string() const {
    std::ostringstream os;
    os << "0 -> R^2" << twist(syzygies[0]) << " -> R" << twist(generators[0]) << " + R"
       << twist(generators[1]) << " + R" << twist(generators[2]) << " -> I -> 0";
    return os.str();
}

std::int64_t GridResolution::hilbert(int i, int j, int k) const {
    return r3(i, j, k) - r3(i - a, j - b, k) - r3(i - a, j, k - c) - r3(i, j - b, k - c) +
           2 * r3(i - a, j - b, k - c);
}

VarietyOfLines ferrers_companion(const VarietyOfLines& x) {
    if (!is_acm(x).is_acm) throw Error(ErrorCode::NotAcm, "companion needs an ACM variety");
    auto l3 = row_partition(x.u3());
    auto l2 = row_partition(x.u2());
    auto l1 = row_partition(x.u1());
    auto left_justified = [](const std::vector<int>& lambda) {
        CellSet u;
        for (std::size_t r = 0; r < lambda.size(); ++r)
            for (int c = 1; c <= lambda[r]; ++c) u.insert({static_cast<int>(r) + 1, c});
        return u;
    };
    auto len = [](const std::vector<int>& l) { return static_cast<int>(l.size()); };
    auto first = [](const std::vector<int>& l) { return l.empty() ? 0 : l.front(); };
    Dims d{std::max(len(l3), len(l2)), std::max(first(l3), len(l1)), std::max(first(l2), first(l1))};
    return VarietyOfLines(d, left_justified(l3), left_justified(l2), left_justified(l1));
}

}  // namespace acmlines
