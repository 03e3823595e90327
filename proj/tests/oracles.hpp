#ifndef HAMSPAN_TESTS_ORACLES_HPP
#define HAMSPAN_TESTS_ORACLES_HPP

// Slow, obviously-correct reference computations. None of them call into the
// search or elimination code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hamspan/graph.hpp"

namespace oracle {

using hamspan::Edge;
using hamspan::Graph;
using EdgeSet = std::set<Edge>;

inline bool adj(const Graph& g, int u, int v)
{
    for (auto [a, b] : g.edges())
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

inline EdgeSet closed_walk_edges(const std::vector<int>& seq)
{
    EdgeSet s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int a = seq[i], b = seq[(i + 1) % seq.size()];
        s.insert({std::min(a, b), std::max(a, b)});
    }
    return s;
}

// Every circuit of the given length as its edge set, by trying all ordered
// vertex selections.
inline std::set<EdgeSet> circuits_of_length(const Graph& g, int len)
{
    std::set<EdgeSet> out;
    const int n = g.order();
    if (len < 3 || len > n) return out;
    std::vector<int> pick;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(pick.size()) == len) {
            if (adj(g, pick.back(), pick.front())) out.insert(closed_walk_edges(pick));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (!pick.empty() && !adj(g, pick.back(), v)) continue;
            used[static_cast<std::size_t>(v)] = 1;
            pick.push_back(v);
            self(self);
            pick.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    rec(rec);
    return out;
}

// Hamilton circuits by permuting vertices 1..n-1 behind vertex 0.
inline std::set<EdgeSet> hamilton_circuits(const Graph& g)
{
    std::set<EdgeSet> out;
    const int n = g.order();
    if (n < 3) return out;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = adj(g, p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>((i + 1) % n)]);
        if (ok) out.insert(closed_walk_edges(p));
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return out;
}

inline bool has_hamilton_path(const Graph& g, int u, int v)
{
    const int n = g.order();
    std::vector<int> mid;
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) mid.push_back(w);
    do {
        std::vector<int> p{u};
        p.insert(p.end(), mid.begin(), mid.end());
        p.push_back(v);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = adj(g, p[i], p[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return false;
}

inline bool hamilton_connected(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!has_hamilton_path(g, u, v)) return false;
    return true;
}

// Rank over GF(2) by counting the elements of the span.
inline int span_rank(const std::vector<EdgeSet>& gens)
{
    std::set<EdgeSet> span{EdgeSet{}};
    for (const auto& g : gens) {
        std::set<EdgeSet> next = span;
        for (const auto& s : span) {
            EdgeSet x;
            std::set_symmetric_difference(s.begin(), s.end(), g.begin(), g.end(), std::inserter(x, x.end()));
            next.insert(x);
        }
        span = std::move(next);
    }
    int r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

inline int components(const Graph& g, const std::vector<char>& removed)
{
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (removed[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : g.edges()) {
                int w = a == v ? b : (b == v ? a : -1);
                if (w < 0 || removed[static_cast<std::size_t>(w)] || comp[static_cast<std::size_t>(w)] >= 0) continue;
                comp[static_cast<std::size_t>(w)] = c;
                stack.push_back(w);
            }
        }
        ++c;
    }
    return c;
}

// betti1 from its definition as f1 - f0 + components.
inline int betti1(const Graph& g)
{
    return g.size() - g.order() + components(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0));
}

inline bool k_connected(const Graph& g, int k)
{
    const int n = g.order();
    if (n <= k) return false;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        if (__builtin_popcount(m) >= k) continue;
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) removed[static_cast<std::size_t>(v)] = (m >> v) & 1U;
        if (components(g, removed) > 1) return false;
    }
    return true;
}

inline bool isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> p(static_cast<std::size_t>(g.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [a, b] : g.edges()) {
            if (!adj(h, p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline int bandwidth(const Graph& g)
{
    const int n = g.order();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    int best = n;
    do {
        int worst = 0;
        for (auto [a, b] : g.edges())
            worst = std::max(worst, std::abs(p[static_cast<std::size_t>(a)] - p[static_cast<std::size_t>(b)]));
        best = std::min(best, worst);
    } while (std::next_permutation(p.begin(), p.end()));
    return n == 0 ? 0 : best;
}

inline bool bipartite(const Graph& g)
{
    const int n = g.order();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        bool ok = true;
        for (auto [a, b] : g.edges()) ok = ok && (((m >> a) & 1U) != ((m >> b) & 1U));
        if (ok) return true;
    }
    return n == 0;
}

// Uniform random graph on n vertices with edge probability p.
inline Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.push_back({u, v});
    return hamspan::new_graph(n, es);
}

inline Graph random_bipartite(std::mt19937_64& rng, int a, int b, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (coin(rng)) es.push_back({u, v});
    return hamspan::new_graph(a + b, es);
}

} // namespace oracle

#endif // HAMSPAN_TESTS_ORACLES_HPP
