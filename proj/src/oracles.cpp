#include <acmlines/oracles.hpp>

#include <acmlines/graph.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace acmlines {

using exact::EchelonBasis;
using exact::Integer;
using exact::SparseVector;

std::vector<Integer> lagrange_vector(int n, int x) {
    const int nodes = n + 1;
    std::vector<Integer> v(nodes, 0);
    if (x >= 1 && x <= nodes) {
        v[x - 1] = 1;
        return v;
    }
    // L_m(x) = prod_{r != m} (x - r) / (m - r), computed exactly.
    for (int m = 1; m <= nodes; ++m) {
        Integer num = 1;
        Integer den = 1;
        for (int r = 1; r <= nodes; ++r) {
            if (r == m) continue;
            num *= x - r;
            den *= m - r;
        }
        v[m - 1] = num / den;
    }
    return v;
}

namespace {

struct Shape {
    int n[3];

    int size() const { return (n[0] + 1) * (n[1] + 1) * (n[2] + 1); }
    int index(int a, int b, int c) const { return (a * (n[1] + 1) + b) * (n[2] + 1) + c; }
};

class LagrangeCache {
public:
    const std::vector<Integer>& get(int n, int x) {
        auto key = std::pair{n, x};
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, lagrange_vector(n, x)).first;
        return it->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<Integer>> cache_;
};

// Evaluation functionals of the sample points of X in tridegree `s`,
// split into unit vectors (recorded as covered coordinates) and the rest.
struct Evaluation {
    Shape shape;
    std::vector<char> covered;
    std::vector<SparseVector> dense;
};

Evaluation evaluation(const VarietyOfLines& x, const Shape& s, LagrangeCache& lc) {
    Evaluation ev{s, std::vector<char>(s.size(), 0), {}};
    auto emit = [&](const std::vector<Integer>& u, const std::vector<Integer>& v,
                    const std::vector<Integer>& w) {
        std::map<int, Integer> m;
        for (int a = 0; a <= s.n[0]; ++a) {
            if (u[a] == 0) continue;
            for (int b = 0; b <= s.n[1]; ++b) {
                if (v[b] == 0) continue;
                for (int c = 0; c <= s.n[2]; ++c) {
                    if (w[c] == 0) continue;
                    m[s.index(a, b, c)] = u[a] * v[b] * w[c];
                }
            }
        }
        if (m.size() == 1) {
            ev.covered[m.begin()->first] = 1;
        } else if (!m.empty()) {
            ev.dense.push_back(SparseVector::from_map(m));
        }
    };
    // Free factor sampled at its nodes 1..deg+1.
    for (const Cell& c : x.u3())
        for (int t = 1; t <= s.n[2] + 1; ++t)
            emit(lc.get(s.n[0], c.row), lc.get(s.n[1], c.col), lc.get(s.n[2], t));
    for (const Cell& c : x.u2())
        for (int t = 1; t <= s.n[1] + 1; ++t)
            emit(lc.get(s.n[0], c.row), lc.get(s.n[1], t), lc.get(s.n[2], c.col));
    for (const Cell& c : x.u1())
        for (int t = 1; t <= s.n[0] + 1; ++t)
            emit(lc.get(s.n[0], t), lc.get(s.n[1], c.row), lc.get(s.n[2], c.col));
    return ev;
}

// Dense vectors projected off the covered coordinates, reindexed onto the
// uncovered ones.
struct Projection {
    std::vector<int> to_compact;  // -1 for covered
    std::vector<int> to_full;
    std::vector<SparseVector> vectors;
};

Projection project(const Evaluation& ev) {
    Projection p;
    p.to_compact.assign(ev.covered.size(), -1);
    for (std::size_t i = 0; i < ev.covered.size(); ++i) {
        if (!ev.covered[i]) {
            p.to_compact[i] = static_cast<int>(p.to_full.size());
            p.to_full.push_back(static_cast<int>(i));
        }
    }
    for (const auto& v : ev.dense) {
        SparseVector w;
        for (const auto& [i, val] : v.entries) {
            if (p.to_compact[i] >= 0) w.push(p.to_compact[i], val);
        }
        if (!w.empty()) p.vectors.push_back(std::move(w));
    }
    return p;
}

std::int64_t rank_of_evaluation(const Evaluation& ev) {
    std::int64_t covered = std::count(ev.covered.begin(), ev.covered.end(), 1);
    Projection p = project(ev);
    return covered + static_cast<std::int64_t>(exact::rank_of(p.vectors, static_cast<int>(p.to_full.size())));
}

// Basis of I_delta in node-value coordinates.
std::vector<SparseVector> kernel_basis(const Evaluation& ev) {
    Projection p = project(ev);
    EchelonBasis b(static_cast<int>(p.to_full.size()));
    for (const auto& v : p.vectors) b.insert(v);
    std::vector<SparseVector> out;
    for (const auto& k : b.orthogonal_complement()) {
        SparseVector full;
        for (const auto& [i, val] : k.entries) full.push(p.to_full[i], val);
        out.push_back(std::move(full));
    }
    return out;
}

}  // namespace

std::int64_t hilbert_oracle_at(const VarietyOfLines& x, int i, int j, int k) {
    LagrangeCache lc;
    return rank_of_evaluation(evaluation(x, Shape{{i, j, k}}, lc));
}

Grid3 hilbert_oracle(const VarietyOfLines& x, DegreeTriple box) {
    LagrangeCache lc;
    Grid3 g(box);
    for (int i = 0; i <= box.a; ++i)
        for (int j = 0; j <= box.b; ++j)
            for (int k = 0; k <= box.c; ++k) g.at(i, j, k) = rank_of_evaluation(evaluation(x, Shape{{i, j, k}}, lc));
    return g;
}

std::int64_t hilbert_oracle_monomial(const VarietyOfLines& x, int i, int j, int k) {
    using HA = HyperplaneAssignment;
    std::vector<std::array<Integer, 3>> points;
    for (const Cell& c : x.u3())
        for (int t = 0; t <= k; ++t) points.push_back({HA::alpha(c.row), HA::beta(c.col), Integer(t)});
    for (const Cell& c : x.u2())
        for (int t = 0; t <= j; ++t) points.push_back({HA::alpha(c.row), Integer(t), HA::gamma(c.col)});
    for (const Cell& c : x.u1())
        for (int t = 0; t <= i; ++t) points.push_back({Integer(t), HA::beta(c.row), HA::gamma(c.col)});

    // Monomial x0^(i-a) x1^a ... evaluated at [1:p] x [1:q] x [1:r].
    exact::RationalMatrix m(static_cast<std::size_t>((i + 1) * (j + 1) * (k + 1)), points.size());
    std::size_t row = 0;
    for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b)
            for (int c = 0; c <= k; ++c, ++row)
                for (std::size_t col = 0; col < points.size(); ++col) {
                    Integer v;
                    Integer pa, pb, pc;
                    mpz_pow_ui(pa.get_mpz_t(), points[col][0].get_mpz_t(), a);
                    mpz_pow_ui(pb.get_mpz_t(), points[col][1].get_mpz_t(), b);
                    mpz_pow_ui(pc.get_mpz_t(), points[col][2].get_mpz_t(), c);
                    m.at(row, col) = pa * pb * pc;
                }
    return static_cast<std::int64_t>(m.rank());
}

GeneratorScan generator_degree_scan(const VarietyOfLines& x, DegreeTriple box) {
    GeneratorScan out;
    const Dims& d = x.d();
    for (const DegreeTriple& g : {DegreeTriple{d[0], d[1], 0}, DegreeTriple{d[0], 0, d[2]},
                                  DegreeTriple{0, d[1], d[2]}}) {
        if (!g.precedes(box)) {
            out.box_too_small = true;
            out.warnings.push_back("BoxTooSmall: guaranteed degree " + g.to_string() + " lies outside box " +
                                   box.to_string());
        }
    }

    LagrangeCache lc;
    std::map<DegreeTriple, std::vector<SparseVector>> kernels;
    auto kernel = [&](const DegreeTriple& t) -> const std::vector<SparseVector>& {
        auto it = kernels.find(t);
        if (it == kernels.end()) {
            it = kernels.emplace(t, kernel_basis(evaluation(x, Shape{{t.a, t.b, t.c}}, lc))).first;
        }
        return it->second;
    };

    for (int i = 0; i <= box.a; ++i)
        for (int j = 0; j <= box.b; ++j)
            for (int k = 0; k <= box.c; ++k) {
                DegreeTriple t{i, j, k};
                const auto& here = kernel(t);
                if (here.empty()) continue;
                Shape s{{i, j, k}};
                EchelonBasis images(s.size());
                for (int f = 0; f < 3 && images.rank() < here.size(); ++f) {
                    if (t[f] == 0) continue;
                    DegreeTriple lower = t;
                    (f == 0 ? lower.a : f == 1 ? lower.b : lower.c) -= 1;
                    Shape ls{{lower.a, lower.b, lower.c}};
                    // Value at the new node t[f] + 1 of a degree t[f] - 1 form.
                    const auto& ext = lc.get(t[f] - 1, t[f] + 1);
                    for (const auto& v : kernel(lower)) {
                        if (images.rank() == here.size()) break;
                        // Group entries into fibres along axis f.
                        std::map<std::array<int, 3>, std::map<int, Integer>> fibres;
                        for (const auto& [idx, val] : v.entries) {
                            int c = idx % (ls.n[2] + 1);
                            int b = (idx / (ls.n[2] + 1)) % (ls.n[1] + 1);
                            int a = idx / ((ls.n[2] + 1) * (ls.n[1] + 1));
                            std::array<int, 3> pos{a, b, c};
                            int along = pos[f];
                            pos[f] = 0;
                            fibres[pos][along] = val;
                        }
                        std::map<int, Integer> x0, x1;
                        for (const auto& [pos, vals] : fibres) {
                            Integer extra = 0;
                            for (const auto& [m, val] : vals) extra += ext[m] * val;
                            auto place = [&](int node, const Integer& val) {
                                std::array<int, 3> p = pos;
                                p[f] = node;
                                int idx = s.index(p[0], p[1], p[2]);
                                x0[idx] = val;
                                x1[idx] = val * (node + 1);
                            };
                            for (const auto& [m, val] : vals) place(m, val);
                            if (extra != 0) place(t[f], extra);
                        }
                        images.insert(SparseVector::from_map(x0));
                        images.insert(SparseVector::from_map(x1));
                    }
                }
                int fresh = static_cast<int>(here.size()) - static_cast<int>(images.rank());
                if (fresh > 0) {
                    out.degrees.push_back(t);
                    out.counts.push_back(fresh);
                }
            }
    return out;
}

SimplicialComplex::SimplicialComplex(std::vector<HyperplaneId> vertices, std::vector<std::uint32_t> facets)
    : vertices_(std::move(vertices)) {
    if (vertex_count() > kMaxVertices) {
        throw Error(ErrorCode::SizeLimit, std::to_string(vertex_count()) + " vertices exceed the limit of " +
                                              std::to_string(kMaxVertices));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (auto f : facets) {
        bool maximal = std::none_of(facets.begin(), facets.end(),
                                    [&](std::uint32_t g) { return g != f && (g & f) == f; });
        if (maximal) facets_.push_back(f);
    }
}

const std::vector<std::uint32_t>& SimplicialComplex::faces() const {
    if (!faces_.empty()) return faces_;
    std::vector<char> seen(std::size_t{1} << vertex_count(), 0);
    seen[0] = 1;
    for (auto f : facets_) {
        for (std::uint32_t s = f;; s = (s - 1) & f) {
            seen[s] = 1;
            if (s == 0) break;
        }
    }
    for (std::uint32_t m = 0; m < seen.size(); ++m)
        if (seen[m]) faces_.push_back(m);
    std::stable_sort(faces_.begin(), faces_.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    return faces_;
}

bool SimplicialComplex::contains(std::uint32_t face) const {
    if (face == 0) return true;
    return std::any_of(facets_.begin(), facets_.end(), [&](std::uint32_t f) { return (f & face) == face; });
}

bool SimplicialComplex::pure() const {
    if (facets_.empty()) return true;
    int n = std::popcount(facets_.front());
    return std::all_of(facets_.begin(), facets_.end(), [&](std::uint32_t f) { return std::popcount(f) == n; });
}

int SimplicialComplex::dimension() const {
    int best = 0;
    for (auto f : facets_) best = std::max(best, std::popcount(f));
    return best - 1;
}

SimplicialComplex SimplicialComplex::link(std::uint32_t face) const {
    std::vector<std::uint32_t> fs;
    for (auto f : facets_) {
        if ((f & face) == face) fs.push_back(f & ~face);
    }
    return SimplicialComplex(vertices_, fs);
}

std::vector<std::int64_t> SimplicialComplex::reduced_betti() const {
    const auto& all = faces();
    int top = dimension();
    // by_size[s] = faces with s vertices.
    std::vector<std::vector<std::uint32_t>> by_size(top + 2);
    for (auto f : all) by_size[std::popcount(f)].push_back(f);

    std::unordered_map<std::uint32_t, int> pos;
    for (const auto& group : by_size)
        for (std::size_t i = 0; i < group.size(); ++i) pos[group[i]] = static_cast<int>(i);

    // rank[s] = rank of the boundary from size s to size s - 1.
    std::vector<std::int64_t> rank(top + 3, 0);
    for (int s = 1; s <= top + 1; ++s) {
        EchelonBasis b(static_cast<int>(by_size[s - 1].size()));
        for (auto f : by_size[s]) {
            std::map<int, Integer> col;
            int sign = 1;
            for (std::uint32_t rest = f; rest; rest &= rest - 1) {
                std::uint32_t bit = rest & (~rest + 1);
                col[pos[f & ~bit]] = sign;
                sign = -sign;
            }
            b.insert(SparseVector::from_map(col));
        }
        rank[s] = static_cast<std::int64_t>(b.rank());
    }
    std::vector<std::int64_t> betti(top + 2);
    for (int s = 0; s <= top + 1; ++s) {
        betti[s] = static_cast<std::int64_t>(by_size[s].size()) - rank[s] - rank[s + 1];
    }
    return betti;
}

SimplicialComplex stanley_reisner_complex(const VarietyOfLines& x) {
    if (x.empty()) throw Error(ErrorCode::EmptyVariety, "the complex needs at least one line");
    IncidenceGraph g = build_graph(x);
    int n = g.graph.vertex_count();
    if (n > SimplicialComplex::kMaxVertices) {
        throw Error(ErrorCode::SizeLimit, std::to_string(n) + " hyperplanes exceed the limit of " +
                                              std::to_string(SimplicialComplex::kMaxVertices));
    }
    std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    std::vector<std::uint32_t> facets;
    for (auto [u, v] : g.graph.edges()) facets.push_back(all & ~(1u << u) & ~(1u << v));
    return SimplicialComplex(g.graph.labels(), facets);
}

bool reisner_cm(const SimplicialComplex& complex) {
    for (auto sigma : complex.faces()) {
        SimplicialComplex lk = complex.link(sigma);
        auto betti = lk.reduced_betti();
        int dim = lk.dimension();
        for (int q = -1; q < dim; ++q) {
            if (betti[q + 1] != 0) return false;
        }
    }
    return true;
}

}  // namespace acmlines
