#pragma once

#include <acmlines/variety.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acmlines {

/// Small undirected simple graph on hyperplane-labelled vertices, backed
/// by an adjacency matrix. Vertex ordinals follow the label order given at
/// construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<HyperplaneId> labels);

    int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }

    const HyperplaneId& label(int v) const { return labels_[v]; }
    const std::vector<HyperplaneId>& labels() const noexcept { return labels_; }
    std::optional<int> vertex_of(const HyperplaneId& h) const;

    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    /// Same vertices, complementary edge set.
    Graph complemented() const;

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * labels_.size() + static_cast<std::size_t>(v);
    }

    std::vector<HyperplaneId> labels_;
    std::vector<unsigned char> adj_;
    std::size_t edge_count_ = 0;
};

/// G_X: vertices a_1..a_d1, b_1..b_d2, c_1..c_d3; one edge per line of X.
/// Its cover ideal is J_X.
struct IncidenceGraph {
    Graph graph;
};

/// G_X^c. Contains every same-family pair.
struct ComplementGraph {
    Graph graph;
};

/// Induced (chordless) cycle of length >= 4, as vertex labels in cycle
/// order, canonicalized: starts at its least vertex and the second entry
/// precedes the last.
struct CycleWitness {
    std::vector<HyperplaneId> cycle;

    std::size_t length() const noexcept { return cycle.size(); }
    std::string to_string() const;
    bool operator==(const CycleWitness&) const = default;
};

struct ChordalityResult {
    bool chordal = true;
    std::optional<CycleWitness> witness;
};

IncidenceGraph build_graph(const VarietyOfLines& x);
ComplementGraph complement(const IncidenceGraph& g);

/// Maximum cardinality search visit order; ties go to the smallest ordinal.
std::vector<int> maximum_cardinality_search(const Graph& g);

/// Maximum cardinality search followed by perfect-elimination-ordering
/// verification. On failure returns a chordless cycle.
ChordalityResult is_chordal(const Graph& g);
ChordalityResult is_chordal(const ComplementGraph& gc);

/// Every induced cycle with 4 <= length <= max_len, canonicalized and
/// sorted.
std::vector<CycleWitness> chordless_cycles(const Graph& g, int max_len);
std::vector<CycleWitness> chordless_cycles(const ComplementGraph& gc, int max_len);

/// Checks the witness definition against g: consecutive vertices
/// adjacent, all other pairs non-adjacent, length >= 4, no repeats.
bool verify_witness(const Graph& g, const CycleWitness& w);

std::string to_dot(const Graph& g, const std::string& name);

}  // namespace acmlines
