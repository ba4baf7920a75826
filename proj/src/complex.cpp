#include "uberhom/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace uberhom {

namespace {

VertexMask bit(VertexId v) { return VertexMask{1} << v; }

// Downward closure of `seeds`, without the empty simplex.
std::vector<Simplex> close_downward(const std::vector<Simplex>& seeds) {
    std::unordered_set<VertexMask> seen;
    std::vector<VertexMask> stack;
    for (Simplex s : seeds)
        if (!s.empty() && seen.insert(s.bits()).second) stack.push_back(s.bits());
    while (!stack.empty()) {
        const VertexMask s = stack.back();
        stack.pop_back();
        if (std::popcount(s) == 1) continue;
        for (VertexMask rest = s; rest; rest &= rest - 1) {
            const VertexMask face = s & ~(rest & -rest);
            if (seen.insert(face).second) stack.push_back(face);
        }
    }
    std::vector<Simplex> out;
    out.reserve(seen.size());
    for (VertexMask s : seen) out.emplace_back(s);
    return out;
}

}  // namespace

Simplex Simplex::from_vertices(std::span<const VertexId> vertices) {
    VertexMask bits = 0;
    for (VertexId v : vertices) {
        if (v >= kMaxVertices) throw InputError("vertex id " + std::to_string(v) + " exceeds the 64-vertex limit");
        if (bits & bit(v)) throw InputError("vertex " + std::to_string(v) + " repeated inside one simplex");
        bits |= bit(v);
    }
    return Simplex(bits);
}

std::vector<VertexId> Simplex::vertices() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for (VertexMask rest = bits_; rest; rest &= rest - 1) out.push_back(static_cast<VertexId>(std::countr_zero(rest)));
    return out;
}

bool canonical_less(Simplex a, Simplex b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    const VertexMask diff = a.bits() ^ b.bits();
    // the lowest vertex in which they differ decides
    return (a.bits() & (diff & -diff)) != 0;
}

SimplexTable::SimplexTable(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end(), canonical_less);
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    for (Simplex s : simplices) {
        if (s.empty()) throw InputError("the empty simplex cannot be stored in a complex");
        const auto dim = static_cast<std::size_t>(s.dimension());
        if (by_dim_.size() <= dim) by_dim_.resize(dim + 1);
        index_.emplace(s.bits(), by_dim_[dim].size());
        by_dim_[dim].push_back(s);
        vertex_mask_ |= s.bits();
    }
}

const std::vector<Simplex>& SimplexTable::simplices(int dim) const {
    static const std::vector<Simplex> none;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplexTable::size() const noexcept {
    std::size_t n = 0;
    for (const auto& d : by_dim_) n += d.size();
    return n;
}

std::optional<std::size_t> SimplexTable::index_of(Simplex s) const {
    auto it = index_.find(s.bits());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SimplexTable SimplexTable::restrict_to(VertexMask mask) const {
    SimplexTable out;
    for (const auto& layer : by_dim_) {
        std::vector<Simplex> kept;
        for (Simplex s : layer)
            if ((s.bits() & ~mask) == 0) kept.push_back(s);
        if (kept.empty()) break;
        for (std::size_t i = 0; i < kept.size(); ++i) out.index_.emplace(kept[i].bits(), i);
        out.by_dim_.push_back(std::move(kept));
    }
    out.vertex_mask_ = vertex_mask_ & mask;
    return out;
}

SimplexTable SimplexTable::intersect(const SimplexTable& other) const {
    SimplexTable out;
    for (const auto& layer : by_dim_) {
        std::vector<Simplex> kept;
        for (Simplex s : layer)
            if (other.contains(s)) kept.push_back(s);
        if (kept.empty()) break;
        for (std::size_t i = 0; i < kept.size(); ++i) out.index_.emplace(kept[i].bits(), i);
        out.by_dim_.push_back(std::move(kept));
    }
    if (!out.by_dim_.empty())
        for (Simplex s : out.by_dim_[0]) out.vertex_mask_ |= s.bits();
    return out;
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, const std::vector<Simplex>& simplices) {
    if (vertex_count > kMaxVertices)
        throw InputError("at most 64 vertices are supported, got " + std::to_string(vertex_count));
    const VertexMask all = mask_below(vertex_count);
    std::vector<Simplex> seeds;
    seeds.reserve(simplices.size() + vertex_count);
    for (Simplex s : simplices) {
        if (s.bits() & ~all) throw InputError("simplex uses a vertex id >= vertex_count");
        seeds.push_back(s);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) seeds.emplace_back(bit(static_cast<VertexId>(v)));
    SimplicialComplex out;
    out.vertex_count_ = vertex_count;
    out.table_ = SimplexTable(close_downward(seeds));
    out.original_ids_.resize(vertex_count);
    std::iota(out.original_ids_.begin(), out.original_ids_.end(), VertexId{0});
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count,
                                                 const std::vector<std::vector<VertexId>>& facets) {
    std::vector<Simplex> seeds;
    seeds.reserve(facets.size());
    for (const auto& f : facets) {
        for (VertexId v : f)
            if (v >= vertex_count)
                throw InputError("vertex id " + std::to_string(v) + " out of range for " + std::to_string(vertex_count) +
                                 " vertices");
        seeds.push_back(Simplex::from_vertices(f));
    }
    return from_simplices(vertex_count, seeds);
}

SimplicialComplex SimplicialComplex::from_table(const SimplexTable& table) {
    std::vector<VertexId> parent;
    for (VertexMask rest = table.vertex_mask(); rest; rest &= rest - 1)
        parent.push_back(static_cast<VertexId>(std::countr_zero(rest)));
    std::vector<Simplex> renumbered;
    renumbered.reserve(table.size());
    for (int d = 0; d <= table.dimension(); ++d)
        for (Simplex s : table.simplices(d)) {
            VertexMask bits = 0;
            for (VertexMask rest = s.bits(); rest; rest &= rest - 1) {
                const VertexMask low = rest & -rest;
                bits |= VertexMask{1} << std::popcount(table.vertex_mask() & (low - 1));
            }
            renumbered.emplace_back(bits);
        }
    SimplicialComplex out;
    out.vertex_count_ = parent.size();
    out.table_ = SimplexTable(std::move(renumbered));
    out.original_ids_ = std::move(parent);
    return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d)
        for (Simplex s : simplices(d)) {
            bool maximal = true;
            for (VertexMask rest = vertex_mask() & ~s.bits(); rest && maximal; rest &= rest - 1)
                if (contains(Simplex(s.bits() | (rest & -rest)))) maximal = false;
            if (maximal) out.push_back(s);
        }
    return out;
}

SimplicialComplex SimplicialComplex::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != vertex_count_)
        throw InputError("expected " + std::to_string(vertex_count_) + " labels, got " + std::to_string(labels.size()));
    SimplicialComplex out = *this;
    out.labels_ = std::move(labels);
    return out;
}

SimplicialComplex SimplicialComplex::with_original_ids(std::vector<VertexId> ids) const {
    if (ids.size() != vertex_count_) throw InputError("original id map has the wrong length");
    SimplicialComplex out = *this;
    out.original_ids_ = std::move(ids);
    return out;
}

Cover::Cover(SimplicialComplex ambient, std::vector<SimplexTable> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)) {
    if (elements_.size() > kMaxVertices) throw CoverError("covers with more than 64 elements are not supported");
    std::unordered_set<VertexMask> covered;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.empty()) throw CoverError("cover element " + std::to_string(i) + " is empty");
        for (int d = 0; d <= e.dimension(); ++d)
            for (Simplex s : e.simplices(d)) {
                if (!ambient_.contains(s))
                    throw CoverError("cover element " + std::to_string(i) + " is not a subcomplex of the ambient complex");
                covered.insert(s.bits());
            }
    }
    if (covered.size() != ambient_.size()) throw CoverError("cover elements do not cover the ambient complex");
}

SimplexTable Cover::intersection_table(VertexMask index_set) const {
    if (index_set == 0) throw CoverError("intersection over the empty index set");
    const auto first = static_cast<std::size_t>(std::countr_zero(index_set));
    SimplexTable out = elements_.at(first);
    for (VertexMask rest = index_set & (index_set - 1); rest; rest &= rest - 1) {
        out = out.intersect(elements_.at(static_cast<std::size_t>(std::countr_zero(rest))));
        if (out.empty()) break;
    }
    return out;
}

SimplicialComplex build_complex(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& facets) {
    return SimplicialComplex::from_facets(vertex_count, facets);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, VertexMask subset) {
    if (subset & ~x.vertex_mask()) throw InputError("vertex subset is not contained in the complex");
    SimplicialComplex out = SimplicialComplex::from_table(x.table().restrict_to(subset));
    if (!x.labels().empty()) {
        std::vector<std::string> labels;
        for (VertexId v : out.original_ids()) labels.push_back(x.labels()[v]);
        out = out.with_labels(std::move(labels));
    }
    return out;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::span<const VertexId> subset) {
    VertexMask mask = 0;
    for (VertexId v : subset) {
        if (v >= x.vertex_count()) throw InputError("vertex " + std::to_string(v) + " is not in the complex");
        mask |= bit(v);
    }
    return induced_subcomplex(x, mask);
}

bool is_standard_simplex(const SimplicialComplex& x) {
    return !x.empty() && x.contains(Simplex(x.vertex_mask()));
}

bool is_connected(const SimplicialComplex& x) {
    if (x.empty()) return false;
    std::vector<VertexMask> nbr(x.vertex_count(), 0);
    for (Simplex e : x.simplices(1)) {
        const auto vs = e.vertices();
        nbr[vs[0]] |= bit(vs[1]);
        nbr[vs[1]] |= bit(vs[0]);
    }
    VertexMask seen = 1, frontier = 1;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask rest = frontier; rest; rest &= rest - 1) next |= nbr[std::countr_zero(rest)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == x.vertex_mask();
}

SimplicialComplex anti_star(const SimplicialComplex& x, VertexId v) {
    if (v >= x.vertex_count()) throw InputError("vertex " + std::to_string(v) + " is not in the complex");
    if (is_standard_simplex(x)) throw StandardSimplexError();
    return induced_subcomplex(x, x.vertex_mask() & ~bit(v));
}

Cover anti_star_cover(const SimplicialComplex& x) {
    if (is_standard_simplex(x)) throw StandardSimplexError();
    if (!is_connected(x)) throw NotConnectedError();
    std::vector<SimplexTable> elements;
    for (std::size_t v = 0; v < x.vertex_count(); ++v)
        elements.push_back(x.table().restrict_to(x.vertex_mask() & ~bit(static_cast<VertexId>(v))));
    return Cover(x, std::move(elements));
}

SimplicialComplex closed_star(const SimplicialComplex& x, VertexId v) {
    if (v >= x.vertex_count()) throw InputError("vertex " + std::to_string(v) + " is not in the complex");
    std::vector<Simplex> seeds;
    for (int d = 0; d <= x.dimension(); ++d)
        for (Simplex s : x.simplices(d))
            if (s.contains(v)) seeds.push_back(s);
    return SimplicialComplex::from_table(SimplexTable(close_downward(seeds)));
}

Cover star_cover(const SimplicialComplex& x) {
    std::vector<SimplexTable> elements;
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
        std::vector<Simplex> seeds;
        for (int d = 0; d <= x.dimension(); ++d)
            for (Simplex s : x.simplices(d))
                if (s.contains(static_cast<VertexId>(v))) seeds.push_back(s);
        elements.emplace_back(close_downward(seeds));
    }
    return Cover(x, std::move(elements));
}

SimplicialComplex nerve(const Cover& c) {
    // Subcomplexes meet iff they share a vertex, so vertex masks decide everything.
    std::vector<VertexMask> verts;
    for (std::size_t i = 0; i < c.size(); ++i) verts.push_back(c.element_table(i).vertex_mask());
    std::vector<Simplex> found;
    std::vector<std::pair<VertexMask, VertexMask>> stack;  // (index set, common vertices)
    for (std::size_t i = 0; i < c.size(); ++i) stack.emplace_back(bit(static_cast<VertexId>(i)), verts[i]);
    while (!stack.empty()) {
        auto [set, common] = stack.back();
        stack.pop_back();
        found.emplace_back(set);
        const auto top = static_cast<std::size_t>(63 - std::countl_zero(set));
        for (std::size_t j = top + 1; j < c.size(); ++j)
            if (common & verts[j]) stack.emplace_back(set | bit(static_cast<VertexId>(j)), common & verts[j]);
    }
    return SimplicialComplex::from_simplices(c.size(), found);
}

SimplicialComplex cover_intersection(const Cover& c, std::span<const std::size_t> index_set) {
    VertexMask mask = 0;
    for (std::size_t j : index_set) {
        if (j >= c.size()) throw CoverError("cover index " + std::to_string(j) + " out of range");
        mask |= bit(static_cast<VertexId>(j));
    }
    return SimplicialComplex::from_table(c.intersection_table(mask));
}

SimplicialComplex link(const SimplicialComplex& x, Simplex sigma) {
    if (sigma.empty() || !x.contains(sigma)) throw InputError("simplex is not in the complex");
    std::vector<Simplex> faces;
    for (int d = 0; d <= x.dimension(); ++d)
        for (Simplex s : x.simplices(d))
            if ((s.bits() & sigma.bits()) == 0 && x.contains(Simplex(s.bits() | sigma.bits()))) faces.push_back(s);
    return SimplicialComplex::from_table(SimplexTable(std::move(faces)));
}

SimplicialComplex cone(const SimplicialComplex& x) {
    const std::size_t m = x.vertex_count();
    if (m + 1 > kMaxVertices) throw InputError("cone would exceed the 64-vertex limit");
    std::vector<Simplex> seeds;
    for (int d = 0; d <= x.dimension(); ++d)
        for (Simplex s : x.simplices(d)) seeds.push_back(s.with(static_cast<VertexId>(m)));
    return SimplicialComplex::from_simplices(m + 1, seeds);
}

SimplicialComplex suspension(const SimplicialComplex& x) {
    const std::size_t m = x.vertex_count();
    if (m + 2 > kMaxVertices) throw InputError("suspension would exceed the 64-vertex limit");
    std::vector<Simplex> seeds;
    for (int d = 0; d <= x.dimension(); ++d)
        for (Simplex s : x.simplices(d)) {
            seeds.push_back(s.with(static_cast<VertexId>(m)));
            seeds.push_back(s.with(static_cast<VertexId>(m + 1)));
        }
    return SimplicialComplex::from_simplices(m + 2, seeds);
}

SimplicialComplex skeleton(const SimplicialComplex& x, int k) {
    std::vector<Simplex> kept;
    for (int d = 0; d <= std::min(k, x.dimension()); ++d)
        for (Simplex s : x.simplices(d)) kept.push_back(s);
    return SimplicialComplex::from_simplices(x.vertex_count(), kept).with_labels(x.labels());
}

SimplicialComplex simplex_boundary(std::size_t n) {
    const std::size_t m = n + 2;
    std::vector<Simplex> seeds;
    for (std::size_t v = 0; v < m; ++v) seeds.emplace_back(mask_below(m) & ~bit(static_cast<VertexId>(v)));
    return SimplicialComplex::from_simplices(m, seeds);
}

SimplicialComplex standard_simplex(std::size_t n) {
    return SimplicialComplex::from_simplices(n + 1, {Simplex(mask_below(n + 1))});
}

long euler_characteristic(const SimplicialComplex& x) {
    long chi = 0;
    for (int d = 0; d <= x.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(x.count(d));
    return chi;
}

}  // namespace uberhom
