#include "uberhom/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "uberhom/chain_complex.hpp"

namespace uberhom {

SimplicialComplex cone_over_square() { return cone(graph_complex(cycle_graph(4))); }

SimplicialComplex projective_plane() {
    return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                              {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

namespace {

Graph pruefer_tree(const std::vector<VertexId>& seq, std::size_t m) {
    std::vector<std::size_t> degree(m, 1);
    for (VertexId v : seq) ++degree[v];
    Graph g(m);
    for (VertexId v : seq) {
        VertexId leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        g.add_edge(leaf, v);
        --degree[leaf];
        --degree[v];
    }
    VertexId a = 0;
    while (degree[a] != 1) ++a;
    VertexId b = a + 1;
    while (degree[b] != 1) ++b;
    g.add_edge(a, b);
    return g;
}

std::string rooted_code(const Graph& g, VertexId v, VertexId parent) {
    std::vector<std::string> children;
    for (VertexMask n = g.neighbours(v); n; n &= n - 1) {
        const auto u = static_cast<VertexId>(std::countr_zero(n));
        if (u != parent) children.push_back(rooted_code(g, u, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

// AHU encoding rooted at the centre(s)
std::string tree_code(const Graph& g) {
    const std::size_t m = g.vertex_count();
    std::vector<std::size_t> degree(m);
    VertexMask alive = g.vertex_mask();
    for (VertexId v = 0; v < m; ++v) degree[v] = g.degree(v);
    while (std::popcount(alive) > 2) {
        std::vector<VertexId> leaves;
        for (VertexMask a = alive; a; a &= a - 1) {
            const auto v = static_cast<VertexId>(std::countr_zero(a));
            if (degree[v] <= 1) leaves.push_back(v);
        }
        for (VertexId v : leaves) {
            alive &= ~(VertexMask{1} << v);
            for (VertexMask n = g.neighbours(v) & alive; n; n &= n - 1) --degree[std::countr_zero(n)];
        }
    }
    const VertexId none = static_cast<VertexId>(m);
    std::string best;
    for (VertexMask a = alive; a; a &= a - 1) {
        auto code = rooted_code(g, static_cast<VertexId>(std::countr_zero(a)), none);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace

std::vector<Graph> all_trees(std::size_t m) {
    if (m < 2) return {Graph(m)};
    if (m > 10) throw InputError("tree enumeration is limited to 10 vertices");
    std::set<std::string> seen;
    std::vector<Graph> out;
    std::vector<VertexId> seq(m - 2, 0);
    while (true) {
        Graph t = pruefer_tree(seq, m);
        if (seen.insert(tree_code(t)).second) out.push_back(std::move(t));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == m) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

std::vector<Graph> all_connected_graphs(std::size_t m) {
    if (m > 6) throw InputError("graph enumeration is limited to 6 vertices");
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < m; ++u)
        for (VertexId v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
    std::vector<std::vector<std::size_t>> index(m, std::vector<std::size_t>(m));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        index[pairs[k].first][pairs[k].second] = k;
        index[pairs[k].second][pairs[k].first] = k;
    }
    std::vector<std::vector<VertexId>> perms;
    std::vector<VertexId> p(m);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t code = 0; code < (std::uint32_t{1} << pairs.size()); ++code) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((code >> k) & 1U) edges.push_back(pairs[k]);
        Graph g = Graph::from_edges(m, edges);
        if (!is_connected(g)) continue;
        std::uint32_t canon = code;
        for (const auto& q : perms) {
            std::uint32_t c = 0;
            for (auto [u, v] : edges) c |= std::uint32_t{1} << index[q[u]][q[v]];
            canon = std::min(canon, c);
        }
        if (seen.insert(canon).second) out.push_back(std::move(g));
    }
    return out;
}

SimplicialComplex random_connected_complex(std::size_t m, std::mt19937_64& rng) {
    if (m < 2) throw InputError("random complexes need at least 2 vertices");
    while (true) {
        SimplicialComplex x;
        if (bernoulli(rng, 0.5)) {
            x = flag_complex(random_graph(m, 0.5, rng, true));
        } else {
            std::vector<std::vector<VertexId>> facets;
            for (VertexId v = 1; v < m; ++v) facets.push_back({static_cast<VertexId>(uniform_below(rng, v)), v});
            const std::size_t extra = 1 + uniform_below(rng, m);
            const std::size_t top = std::min<std::size_t>(4, m - 1);
            for (std::size_t f = 0; f < extra; ++f) {
                const std::size_t size = 2 + uniform_below(rng, top - 1);
                std::vector<VertexId> all(m);
                std::iota(all.begin(), all.end(), 0);
                for (std::size_t i = 0; i < size; ++i) std::swap(all[i], all[i + uniform_below(rng, m - i)]);
                all.resize(size);
                std::sort(all.begin(), all.end());
                facets.push_back(all);
            }
            x = SimplicialComplex::from_facets(m, facets);
        }
        if (!is_standard_simplex(x)) return x;
    }
}

std::vector<NamedComplex> random_complexes(std::size_t count, std::uint64_t seed, std::size_t min_vertices,
                                           std::size_t max_vertices) {
    std::mt19937_64 rng(seed);
    std::vector<NamedComplex> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t m = min_vertices + uniform_below(rng, max_vertices - min_vertices + 1);
        out.push_back({"random-" + std::to_string(i) + "-m" + std::to_string(m), random_connected_complex(m, rng)});
    }
    return out;
}

std::vector<NamedGraph> chordal_suite(std::size_t count, std::uint64_t seed, std::size_t min_vertices,
                                      std::size_t max_vertices) {
    std::mt19937_64 rng(seed);
    std::vector<NamedGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t m = min_vertices + uniform_below(rng, max_vertices - min_vertices + 1);
        // complete graphs are redrawn: their flag complex is a simplex
        Graph g = random_connected_chordal(m, rng);
        while (g.edge_count() == m * (m - 1) / 2) g = random_connected_chordal(m, rng);
        out.push_back({"chordal-" + std::to_string(i) + "-m" + std::to_string(m), std::move(g)});
    }
    return out;
}

std::vector<NamedComplex> fixed_complexes() {
    Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    return {
        {"boundary-triangle", simplex_boundary(1)},
        {"boundary-tetrahedron", simplex_boundary(2)},
        {"square-cone", cone_over_square()},
        {"suspended-edge", suspension(standard_simplex(1))},
        {"cycle-4", graph_complex(cycle_graph(4))},
        {"cycle-5", graph_complex(cycle_graph(5))},
        {"path-3", graph_complex(path_graph(3))},
        {"path-4", graph_complex(path_graph(4))},
        {"projective-plane", projective_plane()},
        {"flag-grid-3x2", flag_complex(grid_graph(3, 2))},
        {"flag-diamond", flag_complex(diamond)},
        {"boundary-triangle-skeleton-cone", cone(simplex_boundary(1))},
    };
}

std::vector<NamedComplex> standard_corpus(std::size_t random_count, std::uint64_t seed) {
    auto out = fixed_complexes();
    for (auto& c : random_complexes(random_count, seed)) out.push_back(std::move(c));
    return out;
}

bool is_good_cover(const Cover& c) {
    const SimplicialComplex n = nerve(c);
    for (int p = 0; p <= n.dimension(); ++p)
        for (Simplex j : n.simplices(p))
            for (const auto& g : simplicial_homology(c.intersection_table(j.bits()), Coefficients{IntegerRing{}}, true))
                if (g.free_rank != 0 || !g.torsion.empty()) return false;
    return true;
}

std::vector<NamedCover> good_star_covers(std::size_t count, std::uint64_t seed) {
    std::vector<NamedComplex> candidates = fixed_complexes();
    std::mt19937_64 rng(seed);
    std::vector<NamedCover> out;
    std::size_t next = 0;
    for (std::size_t attempt = 0; out.size() < count; ++attempt) {
        if (attempt > 10000) throw InputError("could not find enough good star covers");
        if (next == candidates.size()) {
            const std::size_t m = 3 + uniform_below(rng, 5);
            candidates.push_back({"random-star-" + std::to_string(attempt), random_connected_complex(m, rng)});
        }
        const auto& cand = candidates[next++];
        Cover c = star_cover(cand.complex);
        if (is_good_cover(c)) out.push_back({cand.name + "/stars", std::move(c)});
    }
    return out;
}

}  // namespace uberhom
