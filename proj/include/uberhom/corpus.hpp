#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uberhom/complex.hpp"
#include "uberhom/graph.hpp"

namespace uberhom {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

struct NamedGraph {
    std::string name;
    Graph graph;
};

struct NamedCover {
    std::string name;
    Cover cover;
};

/// Cone over the 4-cycle, apex 4.
SimplicialComplex cone_over_square();
/// The 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane();

/// One tree per isomorphism class on m vertices, from Pruefer sequences.
std::vector<Graph> all_trees(std::size_t m);
/// One connected graph per isomorphism class on exactly m vertices (m <= 6).
std::vector<Graph> all_connected_graphs(std::size_t m);

/// Connected complex on m vertices that is not a full simplex: either a flag
/// complex of a random connected graph or a random facet family glued along a
/// spanning tree.
SimplicialComplex random_connected_complex(std::size_t m, std::mt19937_64& rng);
std::vector<NamedComplex> random_complexes(std::size_t count, std::uint64_t seed, std::size_t min_vertices = 4,
                                           std::size_t max_vertices = 7);

/// Connected chordal graphs that are not complete.
std::vector<NamedGraph> chordal_suite(std::size_t count, std::uint64_t seed, std::size_t min_vertices = 3,
                                      std::size_t max_vertices = 10);

/// Small fixed complexes: spheres, cycles, paths, the square cone, a
/// suspension, RP^2 and a few flag complexes.
std::vector<NamedComplex> fixed_complexes();
/// fixed_complexes() followed by random_complexes(count, seed).
std::vector<NamedComplex> standard_corpus(std::size_t random_count = 30, std::uint64_t seed = 1);

/// Every non-empty intersection of the elements has the homology of a point.
bool is_good_cover(const Cover& c);
/// Star covers of corpus-style complexes that pass is_good_cover.
std::vector<NamedCover> good_star_covers(std::size_t count, std::uint64_t seed);

}  // namespace uberhom
