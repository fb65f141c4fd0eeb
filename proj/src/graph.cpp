#include <acmlines/graph.hpp>

#include <algorithm>
#include <deque>
#include <sstream>

namespace acmlines {

Graph::Graph(std::vector<HyperplaneId> labels)
    : labels_(std::move(labels)), adj_(labels_.size() * labels_.size(), 0) {}

void Graph::add_edge(int u, int v) {
    if (u == v) return;
    if (adj_[index(u, v)] == 0) ++edge_count_;
    adj_[index(u, v)] = 1;
    adj_[index(v, u)] = 1;
}

std::optional<int> Graph::vertex_of(const HyperplaneId& h) const {
    auto it = std::find(labels_.begin(), labels_.end(), h);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < vertex_count(); ++u) {
        if (u != v && adjacent(u, v)) out.push_back(u);
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complemented() const {
    Graph c(labels_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

std::string CycleWitness::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += " - ";
        s += cycle[i].name();
    }
    return s;
}

IncidenceGraph build_graph(const VarietyOfLines& x) {
    Graph g(x.hyperplanes());
    for (const Line& l : x.lines()) {
        auto hs = l.hyperplanes();
        g.add_edge(*g.vertex_of(hs[0]), *g.vertex_of(hs[1]));
    }
    return IncidenceGraph{std::move(g)};
}

ComplementGraph complement(const IncidenceGraph& g) { return ComplementGraph{g.graph.complemented()}; }

std::vector<int> maximum_cardinality_search(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        }
        visited[best] = true;
        order.push_back(best);
        for (int u = 0; u < n; ++u) {
            if (!visited[u] && g.adjacent(best, u)) ++weight[u];
        }
    }
    return order;
}

namespace {

std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() > 2 && cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

CycleWitness to_witness(const Graph& g, const std::vector<int>& cyc) {
    CycleWitness w;
    for (int v : canonical_cycle(cyc)) w.cycle.push_back(g.label(v));
    return w;
}

// Shortest path from `from` to `to` whose inner vertices avoid the closed
// neighbourhood of `apex`. Closing it through `apex` gives an induced cycle.
std::optional<std::vector<int>> cycle_through(const Graph& g, int apex, int from, int to) {
    int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int u = 0; u < n; ++u) {
            if (parent[u] != -2 || !g.adjacent(v, u)) continue;
            if (u != to && (u == apex || g.adjacent(apex, u))) continue;
            parent[u] = v;
            queue.push_back(u);
        }
    }
    if (parent[to] == -2) return std::nullopt;
    std::vector<int> cyc{apex};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    cyc.insert(cyc.end(), path.begin(), path.end());
    return cyc;
}

std::optional<std::vector<int>> any_chordless_cycle(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                if (g.adjacent(nb[a], nb[b])) continue;
                if (auto cyc = cycle_through(g, v, nb[a], nb[b])) return cyc;
            }
    }
    return std::nullopt;
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    auto order = maximum_cardinality_search(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    for (int v : order) {
        // Neighbours visited before v; the latest of them must be adjacent
        // to all the others.
        int parent = -1;
        for (int u = 0; u < n; ++u) {
            if (g.adjacent(u, v) && pos[u] < pos[v] && (parent < 0 || pos[u] > pos[parent])) {
                parent = u;
            }
        }
        if (parent < 0) continue;
        for (int w = 0; w < n; ++w) {
            if (w == parent || !g.adjacent(w, v) || pos[w] > pos[v]) continue;
            if (g.adjacent(w, parent)) continue;
            ChordalityResult res{false, std::nullopt};
            auto cyc = cycle_through(g, v, parent, w);
            if (!cyc) cyc = any_chordless_cycle(g);
            if (cyc) res.witness = to_witness(g, *cyc);
            return res;
        }
    }
    return {};
}

ChordalityResult is_chordal(const ComplementGraph& gc) { return is_chordal(gc.graph); }

std::vector<CycleWitness> chordless_cycles(const Graph& g, int max_len) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> found;
    std::vector<int> path;

    auto extend = [&](auto&& self) -> void {
        int s = path.front();
        int last = path.back();
        for (int x = s + 1; x < n; ++x) {
            if (!g.adjacent(last, x)) continue;
            if (std::find(path.begin(), path.end(), x) != path.end()) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (g.adjacent(path[i], x)) {
                    chord = true;
                    break;
                }
            }
            if (chord) continue;
            if (path.size() >= 2 && g.adjacent(s, x)) {
                // x closes the cycle; larger cycles through x would have a chord.
                if (path.size() + 1 >= 4 && path[1] < x) {
                    auto cyc = path;
                    cyc.push_back(x);
                    found.push_back(std::move(cyc));
                }
                continue;
            }
            if (static_cast<int>(path.size()) + 1 >= max_len) continue;
            path.push_back(x);
            self(self);
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        extend(extend);
    }

    std::vector<CycleWitness> out;
    for (auto& cyc : found) out.push_back(to_witness(g, cyc));
    std::sort(out.begin(), out.end(), [](const CycleWitness& a, const CycleWitness& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.cycle < b.cycle;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<CycleWitness> chordless_cycles(const ComplementGraph& gc, int max_len) {
    return chordless_cycles(gc.graph, max_len);
}

bool verify_witness(const Graph& g, const CycleWitness& w) {
    std::size_t len = w.length();
    if (len < 4) return false;
    std::vector<int> v;
    for (const auto& h : w.cycle) {
        auto idx = g.vertex_of(h);
        if (!idx) return false;
        v.push_back(*idx);
    }
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            if (v[i] == v[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(v[i], v[j]) != consecutive) return false;
        }
    return true;
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (const auto& h : g.labels()) os << "  " << h.name() << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << g.label(u).name() << " -- " << g.label(v).name() << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace acmlines
