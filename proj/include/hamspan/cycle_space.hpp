#ifndef HAMSPAN_CYCLE_SPACE_HPP
#define HAMSPAN_CYCLE_SPACE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hamspan/errors.hpp"
#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"

namespace hamspan {

// A graph-theoretical circuit stored as a closed vertex sequence in canonical
// form: smallest vertex first, then the direction whose second vertex is
// smaller than the last one.
class Circuit {
public:
    Circuit() = default;

    // Canonicalizes without checking the host graph.
    static Circuit from_sequence(std::vector<int> seq)
    {
        Circuit c;
        if (seq.empty()) return c;
        auto mn = std::min_element(seq.begin(), seq.end());
        std::rotate(seq.begin(), mn, seq.end());
        if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
        c.vs_ = std::move(seq);
        return c;
    }

    // Validates the sequence against g (length >= 3, distinct vertices,
    // consecutive and closing adjacencies) and canonicalizes it.
    static Circuit make(const Graph& g, std::vector<int> seq)
    {
        if (seq.size() < 3) throw CircuitError("circuit needs at least 3 vertices");
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        for (int v : seq) {
            if (v < 0 || v >= g.order()) throw CircuitError("circuit vertex " + std::to_string(v) + " out of range");
            if (seen[static_cast<std::size_t>(v)]) throw CircuitError("circuit repeats vertex " + std::to_string(v));
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t i = 0; i < seq.size(); ++i) {
            int a = seq[i], b = seq[(i + 1) % seq.size()];
            if (!g.adjacent(a, b))
                throw CircuitError("circuit step " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
        }
        return from_sequence(std::move(seq));
    }

    const std::vector<int>& vertices() const { return vs_; }
    std::size_t length() const { return vs_.size(); }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < vs_.size(); ++i) out.push_back(make_edge(vs_[i], vs_[(i + 1) % vs_.size()]));
        return out;
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < vs_.size(); ++i) s += (i ? "," : "") + std::to_string(vs_[i]);
        return s;
    }

    bool operator==(const Circuit& o) const { return vs_ == o.vs_; }
    bool operator!=(const Circuit& o) const { return vs_ != o.vs_; }
    bool operator<(const Circuit& o) const { return vs_ < o.vs_; }

private:
    std::vector<int> vs_;
};

using CircuitSet = std::vector<Circuit>;

inline void normalize(CircuitSet& s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline std::vector<int> parse_vertex_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("vertex list: '" + item + "' is not an integer");
        }
        if (pos != item.size()) throw ParseError("vertex list: '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

inline Circuit parse_circuit(const Graph& g, const std::string& text) { return Circuit::make(g, parse_vertex_list(text)); }

inline EdgeVector edges_to_chain(const Graph& g, const std::vector<Edge>& edges)
{
    EdgeVector v(static_cast<std::size_t>(g.size()));
    for (auto [a, b] : edges) {
        const int idx = g.edge_index(a, b);
        if (idx < 0) throw EdgeMissingError("edge " + std::to_string(a) + "-" + std::to_string(b) + " not in graph");
        v.flip(static_cast<std::size_t>(idx));
    }
    return v;
}

inline EdgeVector circuit_to_chain(const Graph& g, const Circuit& c) { return edges_to_chain(g, c.edges()); }

inline std::vector<EdgeVector> chains_of(const Graph& g, const CircuitSet& cs)
{
    std::vector<EdgeVector> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(circuit_to_chain(g, c));
    return out;
}

// Boundary check: every vertex has even degree in the support.
inline bool is_cycle(const Graph& g, const EdgeVector& v)
{
    if (v.width() != static_cast<std::size_t>(g.size())) throw WidthMismatchError("is_cycle: width differs from f1");
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    for (auto i : v.support()) {
        ++deg[static_cast<std::size_t>(g.edges()[i].first)];
        ++deg[static_cast<std::size_t>(g.edges()[i].second)];
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

inline int betti1(const Graph& g) { return g.size() - g.order() + component_count(g); }

// Fundamental circuits of the spanning forest grown greedily by edge index.
inline std::vector<EdgeVector> cycle_space_basis(const Graph& g)
{
    const int n = g.order();
    std::vector<int> parent_uf(static_cast<std::size_t>(n));
    std::iota(parent_uf.begin(), parent_uf.end(), 0);
    auto find = [&](int x) {
        while (parent_uf[static_cast<std::size_t>(x)] != x) {
            parent_uf[static_cast<std::size_t>(x)] = parent_uf[static_cast<std::size_t>(parent_uf[static_cast<std::size_t>(x)])];
            x = parent_uf[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<std::vector<std::pair<int, int>>> forest(static_cast<std::size_t>(n));
    std::vector<int> non_tree;
    for (int i = 0; i < g.size(); ++i) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(i)];
        int a = find(u), b = find(v);
        if (a == b) {
            non_tree.push_back(i);
        } else {
            parent_uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            forest[static_cast<std::size_t>(u)].emplace_back(v, i);
            forest[static_cast<std::size_t>(v)].emplace_back(u, i);
        }
    }
    std::vector<int> up(static_cast<std::size_t>(n), -1), up_edge(static_cast<std::size_t>(n), -1),
        depth(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (depth[static_cast<std::size_t>(s)] >= 0) continue;
        depth[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (auto [w, e] : forest[static_cast<std::size_t>(v)]) {
                if (depth[static_cast<std::size_t>(w)] >= 0) continue;
                depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                up[static_cast<std::size_t>(w)] = v;
                up_edge[static_cast<std::size_t>(w)] = e;
                queue.push_back(w);
            }
        }
    }
    std::vector<EdgeVector> basis;
    for (int i : non_tree) {
        EdgeVector c(static_cast<std::size_t>(g.size()));
        c.set(static_cast<std::size_t>(i));
        auto [a, b] = g.edges()[static_cast<std::size_t>(i)];
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]) std::swap(a, b);
            c.flip(static_cast<std::size_t>(up_edge[static_cast<std::size_t>(a)]));
            a = up[static_cast<std::size_t>(a)];
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

// Splits a cycle-space element into edge-disjoint circuits by greedy peeling:
// walks start at the lowest vertex with unused edges and always take the
// lowest unused neighbour; a circuit is cut off whenever the walk revisits a vertex.
inline CircuitSet decompose_support(const Graph& g, const EdgeVector& v)
{
    if (!is_cycle(g, v)) throw PreconditionError("decompose_support: input is not a cycle-space element");
    const int n = g.order();
    std::vector<char> live(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (auto i : v.support()) {
        live[i] = 1;
        ++remaining[static_cast<std::size_t>(g.edges()[i].first)];
        ++remaining[static_cast<std::size_t>(g.edges()[i].second)];
    }
    CircuitSet out;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        while (remaining[static_cast<std::size_t>(start)] > 0) {
            std::vector<int> path{start};
            std::vector<int> path_edges;
            pos[static_cast<std::size_t>(start)] = 0;
            while (!path.empty()) {
                const int at = path.back();
                int next = -1, via = -1;
                for (int w : g.neighbours(at)) {
                    const int e = g.edge_index(at, w);
                    if (live[static_cast<std::size_t>(e)] &&
                        (path_edges.empty() || e != path_edges.back())) {
                        next = w;
                        via = e;
                        break;
                    }
                }
                if (next < 0) break;
                path_edges.push_back(via);
                if (pos[static_cast<std::size_t>(next)] >= 0) {
                    const int p = pos[static_cast<std::size_t>(next)];
                    std::vector<int> cyc(path.begin() + p, path.end());
                    for (std::size_t k = static_cast<std::size_t>(p); k < path_edges.size(); ++k) {
                        const int e = path_edges[k];
                        live[static_cast<std::size_t>(e)] = 0;
                        --remaining[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].first)];
                        --remaining[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].second)];
                    }
                    for (std::size_t k = static_cast<std::size_t>(p) + 1; k < path.size(); ++k)
                        pos[static_cast<std::size_t>(path[k])] = -1;
                    path.resize(static_cast<std::size_t>(p) + 1);
                    path_edges.resize(static_cast<std::size_t>(p));
                    out.push_back(Circuit::from_sequence(std::move(cyc)));
                    if (p == 0 && remaining[static_cast<std::size_t>(start)] == 0) break;
                } else {
                    pos[static_cast<std::size_t>(next)] = static_cast<int>(path.size());
                    path.push_back(next);
                }
            }
            for (int x : path) pos[static_cast<std::size_t>(x)] = -1;
        }
    }
    normalize(out);
    return out;
}

} // namespace hamspan

#endif // HAMSPAN_CYCLE_SPACE_HPP
