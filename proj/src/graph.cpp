#include "uberhom/graph.hpp"

#include <algorithm>
#include <deque>

namespace uberhom {

namespace {

VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

VertexId lowest(VertexMask m) { return static_cast<VertexId>(std::countr_zero(m)); }

// Vertices of `within` reachable from `start` using only vertices of `within`.
VertexMask reach(const Graph& g, VertexMask start, VertexMask within) {
    VertexMask seen = start & within, frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask rest = frontier; rest; rest &= rest - 1) next |= g.neighbours(lowest(rest));
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : adj_(vertex_count, 0) {
    if (vertex_count > kMaxVertices) throw InputError("at most 64 vertices are supported");
}

Graph Graph::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") uses an id out of range");
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v))
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") listed twice");
        g.add_edge(u, v);
    }
    return g;
}

std::size_t Graph::degree(VertexId v) const { return static_cast<std::size_t>(std::popcount(adj_.at(v))); }

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (VertexMask rest = adj_[u] & ~mask_below(u + 1); rest; rest &= rest - 1)
            out.emplace_back(static_cast<VertexId>(u), lowest(rest));
    return out;
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj_.at(u) |= bit(v);
    adj_.at(v) |= bit(u);
}

Graph one_skeleton(const SimplicialComplex& x) {
    Graph g(x.vertex_count());
    for (Simplex e : x.simplices(1)) {
        const auto vs = e.vertices();
        g.add_edge(vs[0], vs[1]);
    }
    return g;
}

SimplicialComplex graph_complex(const Graph& g) {
    std::vector<Simplex> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(bit(u) | bit(v));
    return SimplicialComplex::from_simplices(g.vertex_count(), edges);
}

SimplicialComplex flag_complex(const Graph& g) {
    std::vector<Simplex> cliques;
    std::vector<std::pair<VertexMask, VertexMask>> stack;  // (clique, candidates above its top vertex)
    for (std::size_t v = 0; v < g.vertex_count(); ++v) stack.emplace_back(bit(v), g.neighbours(static_cast<VertexId>(v)) & ~mask_below(v + 1));
    while (!stack.empty()) {
        auto [clique, candidates] = stack.back();
        stack.pop_back();
        cliques.emplace_back(clique);
        for (VertexMask rest = candidates; rest; rest &= rest - 1) {
            const VertexId w = lowest(rest);
            stack.emplace_back(clique | bit(w), candidates & g.neighbours(w) & ~mask_below(w + 1));
        }
    }
    return SimplicialComplex::from_simplices(g.vertex_count(), cliques);
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return reach(g, 1, g.vertex_mask()) == g.vertex_mask();
}

bool induces_connected(const Graph& g, VertexMask subset) {
    if (subset == 0) return false;
    return reach(g, subset & -subset, subset) == subset;
}

VertexMask closed_neighbourhood(const Graph& g, VertexMask subset) {
    VertexMask out = subset;
    for (VertexMask rest = subset; rest; rest &= rest - 1) out |= g.neighbours(lowest(rest));
    return out;
}

bool is_connected_dominating(const Graph& g, VertexMask subset) {
    if (subset & ~g.vertex_mask()) throw InputError("vertex subset is not contained in the graph");
    return closed_neighbourhood(g, subset) == g.vertex_mask() && induces_connected(g, subset);
}

Polynomial::Polynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t Polynomial::evaluate(std::int64_t t) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (c_.size() < other.c_.size()) c_.resize(other.c_.size(), 0);
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    trim();
    return *this;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        std::int64_t c = p.coefficients()[i];
        if (c == 0) continue;
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
            c = c < 0 ? -c : c;
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

Polynomial count_exhaustive(const Graph& g, unsigned jobs) {
    const std::size_t m = g.vertex_count();
    const std::uint64_t total = std::uint64_t{1} << m;
    const std::size_t chunks = std::min<std::uint64_t>(total, 256);
    std::vector<std::vector<std::int64_t>> partial(chunks, std::vector<std::int64_t>(m + 1, 0));
    parallel_for(chunks, jobs, [&](std::size_t chunk) {
        const std::uint64_t lo = total * chunk / chunks, hi = total * (chunk + 1) / chunks;
        for (std::uint64_t s = std::max<std::uint64_t>(lo, 1); s < hi; ++s)
            if (is_connected_dominating(g, s)) ++partial[chunk][static_cast<std::size_t>(std::popcount(s))];
    });
    Polynomial out;
    for (auto& p : partial) out += Polynomial(std::move(p));
    return out;
}

struct Brancher {
    const Graph& g;
    std::vector<std::int64_t>& counts;

    // `chosen` is fixed in, vertices >= next are still open.
    void run(VertexMask chosen, std::size_t next) {
        const VertexMask open = g.vertex_mask() & ~mask_below(next);
        const VertexMask possible = chosen | open;
        if (closed_neighbourhood(g, possible) != g.vertex_mask()) return;
        if (chosen && (reach(g, chosen & -chosen, possible) & chosen) != chosen) return;
        if (next == g.vertex_count()) {
            if (chosen && is_connected_dominating(g, chosen)) ++counts[static_cast<std::size_t>(std::popcount(chosen))];
            return;
        }
        run(chosen | bit(next), next + 1);
        run(chosen, next + 1);
    }
};

Polynomial count_pruned(const Graph& g, unsigned jobs) {
    const std::size_t m = g.vertex_count();
    // Fix the first few vertices to split the work.
    const std::size_t prefix = std::min<std::size_t>(m, 6);
    const std::size_t branches = std::size_t{1} << prefix;
    std::vector<std::vector<std::int64_t>> partial(branches, std::vector<std::int64_t>(m + 1, 0));
    parallel_for(branches, jobs, [&](std::size_t b) {
        Brancher{g, partial[b]}.run(static_cast<VertexMask>(b), prefix);
    });
    Polynomial out;
    for (auto& p : partial) out += Polynomial(std::move(p));
    return out;
}

}  // namespace

Polynomial connected_domination_polynomial(const Graph& g, const ComputeOptions& opts, DominationMethod method) {
    opts.check(g.vertex_count(), kDefaultDominationGuard);
    if (!is_connected(g)) throw NotConnectedError();
    return method == DominationMethod::exhaustive ? count_exhaustive(g, opts.jobs) : count_pruned(g, opts.jobs);
}

std::vector<VertexId> lex_bfs(const Graph& g) {
    const std::size_t n = g.vertex_count();
    // Partition refinement on an ordered list of classes.
    std::vector<std::vector<VertexId>> classes;
    if (n > 0) {
        classes.emplace_back();
        for (std::size_t v = 0; v < n; ++v) classes.back().push_back(static_cast<VertexId>(v));
    }
    std::vector<VertexId> order;
    order.reserve(n);
    while (!classes.empty()) {
        const VertexId v = classes.front().front();
        classes.front().erase(classes.front().begin());
        if (classes.front().empty()) classes.erase(classes.begin());
        order.push_back(v);
        std::vector<std::vector<VertexId>> refined;
        for (auto& cls : classes) {
            std::vector<VertexId> in, out;
            for (VertexId w : cls) (g.adjacent(v, w) ? in : out).push_back(w);
            if (!in.empty()) refined.push_back(std::move(in));
            if (!out.empty()) refined.push_back(std::move(out));
        }
        classes = std::move(refined);
    }
    return order;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<VertexId>& order) {
    if (order.size() != g.vertex_count()) return false;
    std::vector<std::size_t> pos(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= order.size() || pos[order[i]] != order.size()) return false;
        pos[order[i]] = i;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexMask later = 0;
        for (VertexMask rest = g.neighbours(order[i]); rest; rest &= rest - 1)
            if (pos[lowest(rest)] > i) later |= bit(lowest(rest));
        for (VertexMask rest = later; rest; rest &= rest - 1) {
            const VertexId u = lowest(rest);
            if ((later & ~bit(u) & ~g.neighbours(u)) != 0) return false;
        }
    }
    return true;
}

namespace {

// An induced cycle of length >= 4 through some vertex v: two non-adjacent
// neighbours u, w of v joined by a shortest path avoiding the rest of N[v].
std::vector<VertexId> find_chordless_cycle(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        const VertexMask nv = g.neighbours(static_cast<VertexId>(v));
        for (VertexMask ru = nv; ru; ru &= ru - 1) {
            const VertexId u = lowest(ru);
            for (VertexMask rw = nv & ~mask_below(u + 1) & ~g.neighbours(u); rw; rw &= rw - 1) {
                const VertexId w = lowest(rw);
                const VertexMask allowed = (g.vertex_mask() & ~(nv | bit(v))) | bit(u) | bit(w);
                std::vector<int> parent(n, -1);
                std::deque<VertexId> queue{u};
                parent[u] = static_cast<int>(u);
                while (!queue.empty() && parent[w] < 0) {
                    const VertexId a = queue.front();
                    queue.pop_front();
                    for (VertexMask rb = g.neighbours(a) & allowed; rb; rb &= rb - 1) {
                        const VertexId b = lowest(rb);
                        if (parent[b] >= 0) continue;
                        parent[b] = static_cast<int>(a);
                        queue.push_back(b);
                    }
                }
                if (parent[w] < 0) continue;
                std::vector<VertexId> cycle{static_cast<VertexId>(v)};
                std::vector<VertexId> path;
                for (VertexId a = w; a != u; a = static_cast<VertexId>(parent[a])) path.push_back(a);
                path.push_back(u);
                std::reverse(path.begin(), path.end());
                cycle.insert(cycle.end(), path.begin(), path.end());
                return cycle;
            }
        }
    }
    return {};
}

}  // namespace

ChordalityResult chordality(const Graph& g) {
    ChordalityResult out;
    auto order = lex_bfs(g);
    std::reverse(order.begin(), order.end());
    if (is_perfect_elimination_ordering(g, order)) {
        out.chordal = true;
        out.elimination_order = std::move(order);
        return out;
    }
    out.chordless_cycle = find_chordless_cycle(g);
    if (out.chordless_cycle.size() < 4) throw Error("no perfect elimination ordering but no chordless cycle found");
    return out;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbours(u) & g.neighbours(v)) return false;
    return true;
}

Graph path_graph(std::size_t m) {
    if (m == 0) throw InputError("path needs at least one vertex");
    Graph g(m);
    for (std::size_t i = 0; i + 1 < m; ++i) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return g;
}

Graph cycle_graph(std::size_t m) {
    if (m < 3) throw InputError("cycle needs at least three vertices");
    Graph g = path_graph(m);
    g.add_edge(0, static_cast<VertexId>(m - 1));
    return g;
}

Graph complete_graph(std::size_t m) {
    if (m == 0) throw InputError("complete graph needs at least one vertex");
    Graph g(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t a = g.vertex_count(), b = h.vertex_count();
    Graph out(a * b);
    auto id = [b](std::size_t i, std::size_t j) { return static_cast<VertexId>(i * b + j); };
    for (std::size_t i = 0; i < a; ++i)
        for (auto [u, v] : h.edges()) out.add_edge(id(i, u), id(i, v));
    for (auto [u, v] : g.edges())
        for (std::size_t j = 0; j < b; ++j) out.add_edge(id(u, j), id(v, j));
    return out;
}

Graph grid_graph(std::size_t m, std::size_t n) { return cartesian_product(path_graph(m), path_graph(n)); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InputError("uniform_below needs a positive bound");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

bool bernoulli(std::mt19937_64& rng, double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    return (rng() >> 11) < threshold;
}

Graph random_connected_chordal(std::size_t m, std::mt19937_64& rng) {
    if (m == 0) throw InputError("chordal graph needs at least one vertex");
    Graph g(m);
    for (std::size_t k = 1; k < m; ++k) {
        // grow a random maximal-ish clique around a random earlier vertex
        const auto u = static_cast<VertexId>(uniform_below(rng, k));
        std::vector<VertexId> others;
        for (VertexMask rest = g.neighbours(u); rest; rest &= rest - 1) others.push_back(lowest(rest));
        for (std::size_t i = others.size(); i > 1; --i) std::swap(others[i - 1], others[uniform_below(rng, i)]);
        VertexMask clique = bit(u);
        for (VertexId w : others)
            if ((clique & ~g.neighbours(w)) == 0) clique |= bit(w);
        // attach to a random non-empty sub-clique containing u
        VertexMask attach = bit(u);
        for (VertexMask rest = clique & ~bit(u); rest; rest &= rest - 1)
            if (rng() & 1U) attach |= rest & -rest;
        for (VertexMask rest = attach; rest; rest &= rest - 1) g.add_edge(static_cast<VertexId>(k), lowest(rest));
    }
    return g;
}

Graph random_graph(std::size_t m, double p, std::mt19937_64& rng, bool connected) {
    if (m == 0) throw InputError("random graph needs at least one vertex");
    if (connected && m > 1 && p <= 0) throw InputError("edge probability 0 cannot give a connected graph");
    for (;;) {
        Graph g(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (bernoulli(rng, p)) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        if (!connected || is_connected(g)) return g;
    }
}

}  // namespace uberhom
