#ifndef HAMSPAN_GRAPH_HPP
#define HAMSPAN_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/errors.hpp"

namespace hamspan {

using Edge = std::pair<int, int>;
using VertexMap = std::vector<int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Finite simple undirected graph on vertices 0..n-1. The edge list is sorted
// lexicographically and its order is the canonical edge index used everywhere.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return nbrs_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(nbrs_[static_cast<std::size_t>(v)].size()); }

    // Adjacency bitmask of v; only available when order() <= 64.
    std::uint64_t mask(int v) const { return masks_[static_cast<std::size_t>(v)]; }
    bool has_masks() const { return n_ <= 64; }

    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

    // Canonical index of edge {u,v}, or -1 when absent.
    int edge_index(int u, int v) const
    {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
        const Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

    friend Graph new_graph(int n, const std::vector<Edge>& edges);

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::uint64_t> masks_;
};

// Builds the canonical graph; rejects out-of-range endpoints, self-loops and
// duplicate pairs (in either orientation) with the index of the offending pair.
inline Graph new_graph(int n, const std::vector<Edge>& edges)
{
    if (n < 0) throw VertexError("negative vertex count");
    Graph g;
    g.n_ = n;
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    std::map<Edge, std::size_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidEdgeError(i, InvalidEdgeError::Reason::OutOfRange,
                                   "edge #" + std::to_string(i) + " has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw InvalidEdgeError(i, InvalidEdgeError::Reason::SelfLoop,
                                   "edge #" + std::to_string(i) + " is a self-loop at " + std::to_string(u));
        const Edge e = make_edge(u, v);
        if (!seen.emplace(e, i).second)
            throw InvalidEdgeError(i, InvalidEdgeError::Reason::Duplicate,
                                   "edge #" + std::to_string(i) + " duplicates edge #" + std::to_string(seen[e]));
        canon.push_back(e);
    }
    std::sort(canon.begin(), canon.end());
    g.edges_ = std::move(canon);
    g.nbrs_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : g.edges_) {
        g.nbrs_[static_cast<std::size_t>(u)].push_back(v);
        g.nbrs_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.nbrs_) std::sort(nb.begin(), nb.end());
    if (n <= 64) {
        g.masks_.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : g.edges_) {
            g.masks_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            g.masks_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
    }
    return g;
}

inline int min_degree(const Graph& g)
{
    if (g.order() == 0) throw EmptyGraphError("minimum degree of the empty graph is undefined");
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

inline int max_degree(const Graph& g)
{
    if (g.order() == 0) throw EmptyGraphError("maximum degree of the empty graph is undefined");
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline bool is_regular(const Graph& g)
{
    return g.order() == 0 || min_degree(g) == max_degree(g);
}

inline Graph add_edge(const Graph& g, Edge e)
{
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
        throw VertexError("add_edge: invalid endpoints");
    if (g.adjacent(u, v)) throw EdgeExistsError("add_edge: edge already present");
    std::vector<Edge> es = g.edges();
    es.push_back(make_edge(u, v));
    return new_graph(g.order(), es);
}

inline Graph delete_edge(const Graph& g, Edge e)
{
    const int idx = g.edge_index(e.first, e.second);
    if (idx < 0) throw EdgeMissingError("delete_edge: edge not present");
    std::vector<Edge> es = g.edges();
    es.erase(es.begin() + idx);
    return new_graph(g.order(), es);
}

struct VertexDeletion {
    Graph graph;
    // new_index[v] is the label of v in graph, or -1 if v was deleted.
    std::vector<int> new_index;
    // old_index[w] is the original label of vertex w of graph.
    std::vector<int> old_index;
};

inline VertexDeletion delete_vertices(const Graph& g, const std::vector<int>& removed)
{
    VertexDeletion out;
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.order()) throw VertexError("delete_vertices: vertex out of range");
        gone[static_cast<std::size_t>(v)] = 1;
    }
    out.new_index.assign(static_cast<std::size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        out.new_index[static_cast<std::size_t>(v)] = static_cast<int>(out.old_index.size());
        out.old_index.push_back(v);
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) {
        int a = out.new_index[static_cast<std::size_t>(u)];
        int b = out.new_index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) es.emplace_back(a, b);
    }
    out.graph = new_graph(static_cast<int>(out.old_index.size()), es);
    return out;
}

// Number of connected components of g with the flagged vertices ignored.
inline int component_count(const Graph& g, const std::vector<char>& ignored = {})
{
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    if (!ignored.empty())
        for (int v = 0; v < n; ++v) seen[static_cast<std::size_t>(v)] = ignored[static_cast<std::size_t>(v)];
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++count;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

// The empty graph and the one-vertex graph are connected.
inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

inline bool is_k_connected(const Graph& g, int k)
{
    if (k < 1 || k > 4) throw PreconditionError("is_k_connected: k must lie in 1..4");
    const int n = g.order();
    if (n <= k) return false;
    std::vector<char> ignored(static_cast<std::size_t>(n), 0);
    std::vector<int> pick;
    // Every removal set of size < k must leave a connected graph.
    auto rec = [&](auto&& self, int start, int left) -> bool {
        if (component_count(g, ignored) > 1) return false;
        if (left == 0) return true;
        for (int v = start; v < n; ++v) {
            ignored[static_cast<std::size_t>(v)] = 1;
            bool ok = self(self, v + 1, left - 1);
            ignored[static_cast<std::size_t>(v)] = 0;
            if (!ok) return false;
        }
        return true;
    };
    return rec(rec, 0, k - 1);
}

struct Bipartition {
    std::vector<int> first;
    std::vector<int> second;
};

// BFS 2-colouring; the class holding the smallest vertex comes first, both sorted.
inline std::optional<Bipartition> bipartition(const Graph& g)
{
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.neighbours(v)) {
                if (side[static_cast<std::size_t>(w)] < 0) {
                    side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? b.first : b.second).push_back(v);
    if (!b.first.empty() && !b.second.empty() && b.second.front() < b.first.front()) std::swap(b.first, b.second);
    return b;
}

inline bool is_square_bipartite(const Graph& g)
{
    auto b = bipartition(g);
    return b && b->first.size() == b->second.size();
}

// True iff m is a bijection V(g)->V(h) mapping edges to edges and non-edges to non-edges.
inline bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& m)
{
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (static_cast<int>(m.size()) != g.order()) return false;
    std::vector<char> hit(static_cast<std::size_t>(h.order()), 0);
    for (int x : m) {
        if (x < 0 || x >= h.order() || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!h.adjacent(m[static_cast<std::size_t>(u)], m[static_cast<std::size_t>(v)])) return false;
    return true;
}

inline bool verify_automorphism(const Graph& g, const VertexMap& m) { return is_isomorphism(g, g, m); }

namespace detail {

// Joint colour refinement of two graphs; colours are comparable across them.
inline std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& g, const Graph& h)
{
    std::vector<int> cg(static_cast<std::size_t>(g.order())), ch(static_cast<std::size_t>(h.order()));
    for (int v = 0; v < g.order(); ++v) cg[static_cast<std::size_t>(v)] = g.degree(v);
    for (int v = 0; v < h.order(); ++v) ch[static_cast<std::size_t>(v)] = h.degree(v);
    std::size_t classes = 0;
    for (;;) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& x, const std::vector<int>& c, int v) {
            Sig s{c[static_cast<std::size_t>(v)], {}};
            for (int w : x.neighbours(v)) s.second.push_back(c[static_cast<std::size_t>(w)]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::map<Sig, int> ids;
        std::vector<Sig> sg, sh;
        for (int v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
        for (int v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
        for (auto& s : sg) ids.emplace(s, 0);
        for (auto& s : sh) ids.emplace(s, 0);
        int next = 0;
        for (auto& kv : ids) kv.second = next++;
        for (std::size_t i = 0; i < sg.size(); ++i) cg[i] = ids[sg[i]];
        for (std::size_t i = 0; i < sh.size(); ++i) ch[i] = ids[sh[i]];
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return {cg, ch};
}

} // namespace detail

// Backtracking isomorphism search with colour-refinement pruning; both graphs
// must have at most 64 vertices.
inline std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h)
{
    if (g.order() > 64 || h.order() > 64) throw CapacityError("find_isomorphism: more than 64 vertices");
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    const int n = g.order();
    if (n == 0) return VertexMap{};
    auto [cg, ch] = detail::refine_colours(g, h);
    {
        std::vector<int> a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    // Order g's vertices so each one has as many already-placed neighbours as possible.
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> links(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(best)] ||
                (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(best)] &&
                 g.degree(v) > g.degree(best)))
                best = v;
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
        for (int w : g.neighbours(best)) ++links[static_cast<std::size_t>(w)];
    }
    VertexMap map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        const int u = order[static_cast<std::size_t>(k)];
        for (int c = 0; c < n; ++c) {
            if (used[static_cast<std::size_t>(c)] || ch[static_cast<std::size_t>(c)] != cg[static_cast<std::size_t>(u)]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                const int p = order[static_cast<std::size_t>(j)];
                ok = ((g.mask(u) >> p) & 1U) == ((h.mask(c) >> map[static_cast<std::size_t>(p)]) & 1U);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = c;
            used[static_cast<std::size_t>(c)] = 1;
            if (self(self, k + 1)) return true;
            used[static_cast<std::size_t>(c)] = 0;
            map[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

// Text format: "n m", then m lines "u v" (u < v, canonical order); '#' lines are comments.
inline void write_graph(std::ostream& os, const Graph& g)
{
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g)
{
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

inline Graph read_graph(std::istream& is)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("graph file: missing header line");
    auto parse_pair = [](const std::string& s, std::size_t lineno) {
        std::istringstream ss(s);
        long long a = 0, b = 0;
        std::string rest;
        if (!(ss >> a >> b) || (ss >> rest))
            throw ParseError("graph file: expected two integers on line " + std::to_string(lineno));
        return std::pair<long long, long long>{a, b};
    };
    auto [n, m] = parse_pair(lines[0], 1);
    if (n < 0 || m < 0 || n > (1LL << 30)) throw ParseError("graph file: bad header");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("graph file: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
    std::vector<Edge> es;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto [u, v] = parse_pair(lines[i], i + 1);
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return new_graph(static_cast<int>(n), es);
}

inline Graph graph_from_string(const std::string& text)
{
    std::istringstream is(text);
    return read_graph(is);
}

} // namespace hamspan

#endif // HAMSPAN_GRAPH_HPP
