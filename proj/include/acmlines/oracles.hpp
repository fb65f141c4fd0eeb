#pragma once

#include <acmlines/exact.hpp>
#include <acmlines/ferrers.hpp>
#include <acmlines/variety.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace acmlines {

/// Parameters of the hyperplanes on each P1 factor: A_i sits at alpha_i = i,
/// B_j at beta_j = j, C_k at gamma_k = k.
struct HyperplaneAssignment {
    static exact::Integer alpha(int i) { return i; }
    static exact::Integer beta(int j) { return j; }
    static exact::Integer gamma(int k) { return k; }
};

/// Value at x of the degree-n Lagrange basis on the nodes 1..n+1, one entry
/// per node. For a node x this is a unit vector.
std::vector<exact::Integer> lagrange_vector(int n, int x);

/// dim (R/I_X)_(i,j,k): rank of the evaluation functionals of deg+1 points
/// on each line. Works in the Lagrange basis of each factor, so points at
/// nodes give unit vectors; the remaining vectors are ranked exactly.
std::int64_t hilbert_oracle_at(const VarietyOfLines& x, int i, int j, int k);
Grid3 hilbert_oracle(const VarietyOfLines& x, DegreeTriple box);

/// Same quantity from the literal monomial-by-point evaluation matrix,
/// sample parameters t = 0..deg, rank by Bareiss elimination. Slow; used to
/// cross-check hilbert_oracle_at on small degrees.
std::int64_t hilbert_oracle_monomial(const VarietyOfLines& x, int i, int j, int k);

struct GeneratorScan {
    DegreeSet degrees;        // degrees carrying at least one new generator
    std::vector<int> counts;  // number of new generators, aligned with degrees
    bool box_too_small = false;
    std::vector<std::string> warnings;
};

/// Degrees in the box where dim I_delta exceeds the span of
/// x_{f,0} I_{delta-e_f} + x_{f,1} I_{delta-e_f} over f = 1, 2, 3.
GeneratorScan generator_degree_scan(const VarietyOfLines& x, DegreeTriple box);

/// Simplicial complex on at most 16 vertices, faces as bitmasks.
class SimplicialComplex {
public:
    static constexpr int kMaxVertices = 16;

    SimplicialComplex(std::vector<HyperplaneId> vertices, std::vector<std::uint32_t> facets);

    int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
    const std::vector<HyperplaneId>& vertices() const noexcept { return vertices_; }
    const std::vector<std::uint32_t>& facets() const noexcept { return facets_; }

    /// Every face including the empty one, sorted by size then mask.
    const std::vector<std::uint32_t>& faces() const;
    bool contains(std::uint32_t face) const;
    bool pure() const;
    /// Largest face size minus one; -1 for {empty}.
    int dimension() const;

    SimplicialComplex link(std::uint32_t face) const;

    /// Reduced Betti numbers over Q, index q + 1 for q = -1 .. dimension.
    std::vector<std::int64_t> reduced_betti() const;

private:
    std::vector<HyperplaneId> vertices_;
    std::vector<std::uint32_t> facets_;
    mutable std::vector<std::uint32_t> faces_;
};

/// Delta_X: facets V_X minus e for each edge e of G_X. Throws EmptyVariety
/// for X without lines and SizeLimit above 16 hyperplanes.
SimplicialComplex stanley_reisner_complex(const VarietyOfLines& x);

/// Reisner's criterion over Q: every link has vanishing reduced homology
/// below its dimension.
bool reisner_cm(const SimplicialComplex& complex);

}  // namespace acmlines
