#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "uberhom/complex.hpp"
#include "uberhom/options.hpp"

namespace uberhom {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on vertices 0..n-1, stored as neighbour masks.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count);

    /// Throws InputError on loops, repeated edges, or ids out of range.
    static Graph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    VertexMask vertex_mask() const noexcept { return mask_below(adj_.size()); }
    bool adjacent(VertexId u, VertexId v) const { return (adj_.at(u) >> v) & 1U; }
    VertexMask neighbours(VertexId v) const { return adj_.at(v); }
    VertexMask closed_neighbourhood(VertexId v) const { return adj_.at(v) | (VertexMask{1} << v); }
    std::size_t degree(VertexId v) const;
    std::size_t edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Adds edge {u, v}; ignores it if already present.
    void add_edge(VertexId u, VertexId v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexMask> adj_;
};

Graph one_skeleton(const SimplicialComplex& x);
/// The graph as a 1-dimensional complex.
SimplicialComplex graph_complex(const Graph& g);

bool is_connected(const Graph& g);
/// Whether the induced subgraph on `subset` is non-empty and connected.
bool induces_connected(const Graph& g, VertexMask subset);
/// Union of the closed neighbourhoods of the vertices in `subset`.
VertexMask closed_neighbourhood(const Graph& g, VertexMask subset);
bool is_connected_dominating(const Graph& g, VertexMask subset);

/// Integer polynomial, coefficient i at index i, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::int64_t> coefficients);

    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::int64_t evaluate(std::int64_t t) const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<std::int64_t> c_;
};

/// Human form in the variable t, e.g. "3t + 3t^2 + t^3".
std::string to_string(const Polynomial& p);

enum class DominationMethod {
    /// Every non-empty subset, in binary-counter order.
    exhaustive,
    /// Vertex-by-vertex branching that cuts branches which can no longer
    /// dominate or stay connected.
    pruned,
};

/// D_c(G)(t) = sum over connected dominating sets S of t^|S|.
/// Throws NotConnectedError, SizeGuardExceeded (default guard 24 vertices).
Polynomial connected_domination_polynomial(const Graph& g, const ComputeOptions& opts = {},
                                           DominationMethod method = DominationMethod::pruned);

/// Lexicographic breadth-first search order, starting from vertex 0.
std::vector<VertexId> lex_bfs(const Graph& g);
/// Each vertex's neighbours later in `order` form a clique.
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& order);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering when chordal.
    std::vector<VertexId> elimination_order;
    /// Vertices of an induced cycle of length >= 4, in cyclic order, when not.
    std::vector<VertexId> chordless_cycle;
};

ChordalityResult chordality(const Graph& g);
inline bool is_chordal(const Graph& g) { return chordality(g).chordal; }

bool is_triangle_free(const Graph& g);

Graph path_graph(std::size_t m);
Graph cycle_graph(std::size_t m);
Graph complete_graph(std::size_t m);
Graph cartesian_product(const Graph& g, const Graph& h);
/// path(m) x path(n); vertex (i, j) has id i * n + j.
Graph grid_graph(std::size_t m, std::size_t n);

/// Portable random helpers on top of raw mt19937_64 output, so seeded results
/// do not depend on the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// True with probability p (p clamped to [0, 1]).
bool bernoulli(std::mt19937_64& rng, double p);

/// Connected chordal graph grown by attaching each new vertex to a random
/// non-empty clique, so every vertex is simplicial when added.
Graph random_connected_chordal(std::size_t m, std::mt19937_64& rng);
/// G(m, p); when `connected` is set, redraws until the graph is connected.
Graph random_graph(std::size_t m, double p, std::mt19937_64& rng, bool connected);

}  // namespace uberhom
