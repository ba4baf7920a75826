#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "uberhom/errors.hpp"
#include "uberhom/options.hpp"

namespace uberhom {

class Graph;

/// Position of a vertex in the fixed vertex order of its complex.
using VertexId = std::uint32_t;

/// Vertex sets are bitmasks, so complexes have at most this many vertices.
inline constexpr std::size_t kMaxVertices = 64;

using VertexMask = std::uint64_t;

inline VertexMask mask_below(std::size_t n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

/// A finite vertex set, read as the strictly increasing sequence of its members.
/// The empty simplex stands for the augmentation in reduced chain complexes.
class Simplex {
public:
    constexpr Simplex() = default;
    constexpr explicit Simplex(VertexMask bits) : bits_(bits) {}

    /// Throws InputError on a repeated vertex or an id beyond kMaxVertices.
    static Simplex from_vertices(std::span<const VertexId> vertices);

    constexpr VertexMask bits() const noexcept { return bits_; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr int dimension() const noexcept { return static_cast<int>(size()) - 1; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(VertexId v) const noexcept { return v < 64 && (bits_ >> v) & 1U; }
    constexpr bool is_face_of(Simplex other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr Simplex with(VertexId v) const noexcept { return Simplex(bits_ | (VertexMask{1} << v)); }
    constexpr Simplex without(VertexId v) const noexcept { return Simplex(bits_ & ~(VertexMask{1} << v)); }

    std::vector<VertexId> vertices() const;

    friend constexpr bool operator==(Simplex, Simplex) = default;

private:
    VertexMask bits_ = 0;
};

/// Size first, then lexicographic on the increasing vertex sequence.
bool canonical_less(Simplex a, Simplex b) noexcept;

/// Simplices grouped by dimension in canonical order, with reverse lookup.
class SimplexTable {
public:
    SimplexTable() = default;
    /// `simplices` must be downward closed and free of the empty simplex.
    explicit SimplexTable(std::vector<Simplex> simplices);

    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return by_dim_.empty(); }
    std::optional<std::size_t> index_of(Simplex s) const;
    bool contains(Simplex s) const { return index_of(s).has_value(); }
    VertexMask vertex_mask() const noexcept { return vertex_mask_; }

    /// The simplices whose vertices all lie in `mask`, in the same order.
    SimplexTable restrict_to(VertexMask mask) const;
    /// Simplices present in both tables.
    SimplexTable intersect(const SimplexTable& other) const;

    friend bool operator==(const SimplexTable& a, const SimplexTable& b) { return a.by_dim_ == b.by_dim_; }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::unordered_map<VertexMask, std::size_t> index_;
    VertexMask vertex_mask_ = 0;
};

/// A finite abstract simplicial complex on vertices 0..vertex_count-1; every
/// vertex is a 0-simplex. Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the facets; unused ids become isolated vertices.
    static SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& facets);
    static SimplicialComplex from_simplices(std::size_t vertex_count, const std::vector<Simplex>& simplices);
    /// Renumbers the vertices of `table` order-preservingly onto 0..k-1; the
    /// parent ids become original_ids().
    static SimplicialComplex from_table(const SimplexTable& table);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    int dimension() const noexcept { return table_.dimension(); }
    const SimplexTable& table() const noexcept { return table_; }
    const std::vector<Simplex>& simplices(int dim) const { return table_.simplices(dim); }
    std::size_t count(int dim) const { return table_.count(dim); }
    std::size_t size() const noexcept { return table_.size(); }
    bool empty() const noexcept { return vertex_count_ == 0; }
    bool contains(Simplex s) const { return table_.contains(s); }
    std::optional<std::size_t> index_of(Simplex s) const { return table_.index_of(s); }
    VertexMask vertex_mask() const noexcept { return mask_below(vertex_count_); }
    std::vector<Simplex> facets() const;

    /// For each vertex, its id in the complex this one was derived from.
    const std::vector<VertexId>& original_ids() const noexcept { return original_ids_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    SimplicialComplex with_labels(std::vector<std::string> labels) const;
    SimplicialComplex with_original_ids(std::vector<VertexId> ids) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.table_ == b.table_;
    }

private:
    std::size_t vertex_count_ = 0;
    SimplexTable table_;
    std::vector<VertexId> original_ids_;
    std::vector<std::string> labels_;
};

/// A family of non-empty subcomplexes whose union is the ambient complex.
/// Elements are stored in ambient numbering.
class Cover {
public:
    Cover(SimplicialComplex ambient, std::vector<SimplexTable> elements);

    const SimplicialComplex& ambient() const noexcept { return ambient_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const SimplexTable& element_table(std::size_t i) const { return elements_.at(i); }
    SimplicialComplex element(std::size_t i) const { return SimplicialComplex::from_table(elements_.at(i)); }
    /// U_J in ambient numbering for a non-empty index set J given as a bitmask.
    SimplexTable intersection_table(VertexMask index_set) const;

private:
    SimplicialComplex ambient_;
    std::vector<SimplexTable> elements_;
};

SimplicialComplex build_complex(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& facets);

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, VertexMask subset);
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::span<const VertexId> subset);

bool is_standard_simplex(const SimplicialComplex& x);
bool is_connected(const SimplicialComplex& x);

/// Subcomplex spanned by every vertex except v. Throws StandardSimplexError.
SimplicialComplex anti_star(const SimplicialComplex& x, VertexId v);
/// [ast(v_0), ..., ast(v_{m-1})]. Throws StandardSimplexError / NotConnectedError.
Cover anti_star_cover(const SimplicialComplex& x);

SimplicialComplex closed_star(const SimplicialComplex& x, VertexId v);
/// Closed stars of all vertices.
Cover star_cover(const SimplicialComplex& x);

/// Index sets J with non-empty U_J, as a complex on the cover indices.
SimplicialComplex nerve(const Cover& c);
/// U_J for a non-empty index list J, renumbered with ambient ids as original_ids.
SimplicialComplex cover_intersection(const Cover& c, std::span<const std::size_t> index_set);

SimplicialComplex link(const SimplicialComplex& x, Simplex sigma);

/// Apex gets index m.
SimplicialComplex cone(const SimplicialComplex& x);
/// Apexes get indices m and m+1 and are not joined to each other.
SimplicialComplex suspension(const SimplicialComplex& x);
SimplicialComplex flag_complex(const Graph& g);
SimplicialComplex skeleton(const SimplicialComplex& x, int k);

/// The boundary of the (n+1)-simplex, a triangulated n-sphere.
SimplicialComplex simplex_boundary(std::size_t n);
SimplicialComplex standard_simplex(std::size_t n);

long euler_characteristic(const SimplicialComplex& x);

}  // namespace uberhom
