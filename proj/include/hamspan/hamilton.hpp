#ifndef HAMSPAN_HAMILTON_HPP
#define HAMSPAN_HAMILTON_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/cycle_space.hpp"
#include "hamspan/errors.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/parallel.hpp"

namespace hamspan {

// A rule producing admissible lengths from a graph: explicit integers and
// terms relative to the vertex count f0, e.g. {f0}, {f0-1, f0}, or L-1.
class LengthSet {
public:
    struct Term {
        bool relative;
        int offset;
        bool operator<(const Term& o) const { return std::pair(relative, offset) < std::pair(o.relative, o.offset); }
        bool operator==(const Term& o) const { return relative == o.relative && offset == o.offset; }
    };

    LengthSet() = default;
    explicit LengthSet(std::vector<Term> terms) : terms_(std::move(terms))
    {
        std::sort(terms_.begin(), terms_.end());
        terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
    }

    static LengthSet order() { return LengthSet({{true, 0}}); }
    static LengthSet order_minus_one() { return LengthSet({{true, -1}}); }
    static LengthSet near_order() { return LengthSet({{true, -1}, {true, 0}}); }
    static LengthSet explicit_set(const std::vector<int>& values)
    {
        std::vector<Term> t;
        for (int v : values) t.push_back({false, v});
        return LengthSet(t);
    }

    // L + delta, so the path lengths for L are shifted(-1).
    LengthSet shifted(int delta) const
    {
        std::vector<Term> t = terms_;
        for (auto& x : t) x.offset += delta;
        return LengthSet(t);
    }

    const std::vector<Term>& terms() const { return terms_; }

    std::vector<int> evaluate(int f0) const
    {
        std::set<int> out;
        for (const auto& t : terms_) out.insert(t.relative ? f0 + t.offset : t.offset);
        return {out.begin(), out.end()};
    }

    std::vector<int> circuit_lengths(const Graph& g) const { return clipped(g.order(), 3, g.order()); }
    std::vector<int> path_lengths(const Graph& g) const { return clipped(g.order(), 1, g.order() - 1); }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            s += i ? "," : "";
            const auto& t = terms_[i];
            if (!t.relative) {
                s += std::to_string(t.offset);
            } else {
                s += "f0";
                if (t.offset > 0) s += "+" + std::to_string(t.offset);
                if (t.offset < 0) s += std::to_string(t.offset);
            }
        }
        return s;
    }

    // Comma-separated terms: integers, "f0", "f0-k" or "f0+k".
    static LengthSet parse(const std::string& text)
    {
        std::vector<Term> t;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw ParseError("length set: empty term");
            try {
                std::size_t pos = 0;
                if (item.rfind("f0", 0) == 0) {
                    int off = 0;
                    if (item.size() > 2) {
                        off = std::stoi(item.substr(2), &pos);
                        if (pos != item.size() - 2 || (item[2] != '+' && item[2] != '-')) throw ParseError("");
                    }
                    t.push_back({true, off});
                } else {
                    int v = std::stoi(item, &pos);
                    if (pos != item.size()) throw ParseError("");
                    t.push_back({false, v});
                }
            } catch (const std::exception&) {
                throw ParseError("length set: bad term '" + item + "'");
            }
        }
        if (t.empty()) throw ParseError("length set: no terms");
        return LengthSet(t);
    }

    bool operator==(const LengthSet& o) const { return terms_ == o.terms_; }

private:
    std::vector<int> clipped(int f0, int lo, int hi) const
    {
        std::vector<int> out;
        for (int v : evaluate(f0))
            if (v >= lo && v <= hi) out.push_back(v);
        return out;
    }

    std::vector<Term> terms_;
};

struct SearchOptions {
    std::size_t cap = 1'000'000;
    int threads = 1;
};

struct CircuitSearch {
    CircuitSet circuits;
    // True when the cap was hit; circuits then holds the first `cap` in canonical order.
    bool partial = false;
};

namespace detail {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (bit(n) - 1); }

inline void require_masks(const Graph& g, const char* what)
{
    if (g.order() > 64) throw CapacityError(std::string(what) + ": more than 64 vertices");
}

// Vertices of `inside` reachable from `from` through `inside`.
inline std::uint64_t reach(const Graph& g, int from, std::uint64_t inside)
{
    std::uint64_t seen = bit(from), frontier = bit(from);
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.mask(std::countr_zero(f));
        next &= inside & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

// Depth-first Hamilton circuit search anchored at vertex 0 with the second vertex
// fixed; hands circuits whose second vertex is smaller than the last to `sink`,
// which returns false to stop the search.
template <typename Sink>
class CircuitWalker {
public:
    CircuitWalker(const Graph& g, Sink& sink) : g_(g), sink_(sink), all_(full_mask(g.order())) {}

    // False when the sink stopped the search.
    bool run(int second)
    {
        path_ = {0, second};
        walk(bit(0) | bit(second), second);
        return !stopped_;
    }

private:
    void walk(std::uint64_t visited, int end)
    {
        const std::uint64_t open = all_ & ~visited;
        if (!open) {
            if ((g_.mask(end) & bit(0)) && path_[1] < end && !sink_(path_)) stopped_ = true;
            return;
        }
        if (!(g_.mask(0) & open)) return;
        const std::uint64_t live = open | bit(end) | bit(0);
        std::uint64_t forced = 0;
        for (std::uint64_t o = open; o; o &= o - 1) {
            const int u = std::countr_zero(o);
            const int avail = std::popcount(g_.mask(u) & live);
            if (avail < 2) return;
            if (avail == 2 && (g_.mask(u) & bit(end))) {
                if (forced) return;
                forced = bit(u);
            }
        }
        if ((reach(g_, end, open | bit(end)) & open) != open) return;
        std::uint64_t choices = g_.mask(end) & open;
        if (forced) choices &= forced;
        for (; choices; choices &= choices - 1) {
            const int w = std::countr_zero(choices);
            path_.push_back(w);
            walk(visited | bit(w), w);
            path_.pop_back();
            if (stopped_) return;
        }
    }

    const Graph& g_;
    Sink& sink_;
    std::uint64_t all_;
    std::vector<int> path_;
    bool stopped_ = false;
};

// Hamilton path search from `from` to `to`; `to` is entered only as the last vertex.
class PathWalker {
public:
    PathWalker(const Graph& g, int from, int to) : g_(g), to_(to), all_(full_mask(g.order())) { path_ = {from}; }

    std::optional<std::vector<int>> run()
    {
        if (walk(bit(path_[0]), path_[0])) return path_;
        return std::nullopt;
    }

private:
    bool walk(std::uint64_t visited, int end)
    {
        const std::uint64_t open = all_ & ~visited;
        if (open == bit(to_)) {
            if (g_.mask(end) & bit(to_)) {
                path_.push_back(to_);
                return true;
            }
            return false;
        }
        const std::uint64_t live = open | bit(end);
        if (!(g_.mask(to_) & live & ~bit(to_))) return false;
        std::uint64_t forced = 0;
        for (std::uint64_t o = open & ~bit(to_); o; o &= o - 1) {
            const int u = std::countr_zero(o);
            const int avail = std::popcount(g_.mask(u) & live);
            if (avail < 2) return false;
            if (avail == 2 && (g_.mask(u) & bit(end))) {
                if (forced) return false;
                forced = bit(u);
            }
        }
        if ((reach(g_, end, live) & open) != open) return false;
        std::uint64_t choices = g_.mask(end) & open & ~bit(to_);
        if (forced) choices &= forced;
        for (; choices; choices &= choices - 1) {
            const int w = std::countr_zero(choices);
            path_.push_back(w);
            if (walk(visited | bit(w), w)) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int to_;
    std::uint64_t all_;
    std::vector<int> path_;
};

inline CircuitSearch merge_capped(std::vector<std::vector<std::vector<int>>>& parts, std::size_t cap,
                                  bool partial = false)
{
    CircuitSearch out;
    out.partial = partial;
    for (auto& part : parts)
        for (auto& seq : part) out.circuits.push_back(Circuit::from_sequence(std::move(seq)));
    normalize(out.circuits);
    if (out.circuits.size() > cap) {
        out.circuits.resize(cap);
        out.partial = true;
    }
    return out;
}

// All circuits of exactly the given lengths (each <= f0 - 2) by plain DFS from
// their smallest vertex.
inline CircuitSearch short_circuits(const Graph& g, const std::vector<int>& lengths, const SearchOptions& opt)
{
    const int n = g.order();
    if (lengths.empty()) return {};
    const int longest = *std::max_element(lengths.begin(), lengths.end());
    std::vector<char> wanted(static_cast<std::size_t>(longest) + 1, 0);
    for (int l : lengths) wanted[static_cast<std::size_t>(l)] = 1;
    std::vector<std::vector<std::vector<int>>> parts(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), opt.threads, [&](std::size_t si) {
        const int s = static_cast<int>(si);
        auto& found = parts[si];
        std::vector<int> path{s};
        std::vector<char> on(static_cast<std::size_t>(n), 0);
        on[si] = 1;
        auto rec = [&](auto&& self, int end) -> void {
            if (found.size() > opt.cap) return;
            const int len = static_cast<int>(path.size());
            if (len >= 3 && wanted[static_cast<std::size_t>(len)] && g.adjacent(end, s) && path[1] < end)
                found.push_back(path);
            if (len == longest) return;
            for (int w : g.neighbours(end)) {
                if (w <= s || on[static_cast<std::size_t>(w)]) continue;
                on[static_cast<std::size_t>(w)] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on[static_cast<std::size_t>(w)] = 0;
            }
        };
        rec(rec, s);
    });
    return merge_capped(parts, opt.cap);
}

} // namespace detail

inline CircuitSearch hamilton_circuits(const Graph& g, const SearchOptions& opt = {})
{
    if (g.order() < 3) throw PreconditionError("hamilton_circuits: needs f0 >= 3");
    detail::require_masks(g, "hamilton_circuits");
    const auto& first = g.neighbours(0);
    std::vector<std::vector<std::vector<int>>> parts(first.size());
    parallel_for(first.size(), opt.threads, [&](std::size_t i) {
        auto& found = parts[i];
        auto sink = [&](const std::vector<int>& seq) {
            found.push_back(seq);
            return found.size() <= opt.cap;
        };
        detail::CircuitWalker walker(g, sink);
        walker.run(first[i]);
    });
    return detail::merge_capped(parts, opt.cap);
}

// Calls visit(sequence) for each Hamilton circuit in a fixed sequential order
// until it returns false; returns false when stopped early.
template <typename Visit>
bool for_each_hamilton_circuit(const Graph& g, Visit&& visit)
{
    if (g.order() < 3) throw PreconditionError("for_each_hamilton_circuit: needs f0 >= 3");
    detail::require_masks(g, "for_each_hamilton_circuit");
    for (int second : g.neighbours(0)) {
        detail::CircuitWalker walker(g, visit);
        if (!walker.run(second)) return false;
    }
    return true;
}

namespace detail {

// Circuits of length f0-1: Hamilton circuits of g - w for every vertex w.
inline CircuitSearch almost_hamilton_circuits(const Graph& g, const SearchOptions& opt)
{
    const int n = g.order();
    std::vector<std::vector<std::vector<int>>> parts(static_cast<std::size_t>(n));
    std::vector<char> capped(static_cast<std::size_t>(n), 0);
    SearchOptions inner{opt.cap, 1};
    parallel_for(static_cast<std::size_t>(n), opt.threads, [&](std::size_t wi) {
        auto del = delete_vertices(g, {static_cast<int>(wi)});
        if (del.graph.order() < 3) return;
        auto hs = hamilton_circuits(del.graph, inner);
        for (const auto& c : hs.circuits) {
            std::vector<int> seq;
            for (int v : c.vertices()) seq.push_back(del.old_index[static_cast<std::size_t>(v)]);
            parts[wi].push_back(std::move(seq));
        }
        capped[wi] = hs.partial;
    });
    return merge_capped(parts, opt.cap, std::find(capped.begin(), capped.end(), 1) != capped.end());
}

} // namespace detail

inline CircuitSearch circuits_of_lengths(const Graph& g, const std::vector<int>& lengths, const SearchOptions& opt = {})
{
    detail::require_masks(g, "circuits_with_lengths");
    const int n = g.order();
    std::vector<int> shorter;
    CircuitSearch out;
    for (int l : lengths) {
        if (l < 3 || l > n) continue;
        if (l == n || l == n - 1) {
            auto part = l == n ? hamilton_circuits(g, opt) : detail::almost_hamilton_circuits(g, opt);
            out.partial = out.partial || part.partial;
            out.circuits.insert(out.circuits.end(), part.circuits.begin(), part.circuits.end());
        } else {
            shorter.push_back(l);
        }
    }
    if (!shorter.empty()) {
        auto part = detail::short_circuits(g, shorter, opt);
        out.partial = out.partial || part.partial;
        out.circuits.insert(out.circuits.end(), part.circuits.begin(), part.circuits.end());
    }
    normalize(out.circuits);
    if (out.circuits.size() > opt.cap) {
        out.circuits.resize(opt.cap);
        out.partial = true;
    }
    return out;
}

inline CircuitSearch circuits_with_lengths(const Graph& g, const LengthSet& L, const SearchOptions& opt = {})
{
    return circuits_of_lengths(g, L.circuit_lengths(g), opt);
}

inline std::optional<std::vector<int>> hamilton_path(const Graph& g, int u, int v)
{
    if (u == v) throw PreconditionError("hamilton_path: endpoints must differ");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw VertexError("hamilton_path: vertex out of range");
    detail::require_masks(g, "hamilton_path");
    return detail::PathWalker(g, u, v).run();
}

// A u-v path whose edge count lies in `lengths`; longer lengths are tried first.
inline std::optional<std::vector<int>> path_with_lengths(const Graph& g, int u, int v, const std::vector<int>& lengths)
{
    if (u == v) throw PreconditionError("path_with_lengths: endpoints must differ");
    const int n = g.order();
    std::vector<int> ls = lengths;
    std::sort(ls.rbegin(), ls.rend());
    for (int l : ls) {
        if (l < 1 || l > n - 1) continue;
        if (l == n - 1) {
            if (auto p = hamilton_path(g, u, v)) return p;
        } else if (l == n - 2) {
            for (int w = 0; w < n; ++w) {
                if (w == u || w == v) continue;
                auto del = delete_vertices(g, {w});
                auto p = hamilton_path(del.graph, del.new_index[static_cast<std::size_t>(u)],
                                       del.new_index[static_cast<std::size_t>(v)]);
                if (p) {
                    for (auto& x : *p) x = del.old_index[static_cast<std::size_t>(x)];
                    return p;
                }
            }
        } else {
            std::vector<int> path{u};
            std::vector<char> on(static_cast<std::size_t>(n), 0);
            on[static_cast<std::size_t>(u)] = 1;
            auto rec = [&](auto&& self, int end) -> bool {
                const int edges = static_cast<int>(path.size()) - 1;
                if (end == v) return edges == l;
                if (edges == l) return false;
                for (int w : g.neighbours(end)) {
                    if (on[static_cast<std::size_t>(w)]) continue;
                    if (w == v && edges + 1 != l) continue;
                    on[static_cast<std::size_t>(w)] = 1;
                    path.push_back(w);
                    if (self(self, w)) return true;
                    path.pop_back();
                    on[static_cast<std::size_t>(w)] = 0;
                }
                return false;
            };
            if (rec(rec, u)) return path;
        }
    }
    return std::nullopt;
}

struct PairCheck {
    bool holds = true;
    // First pair (in lexicographic order) without a suitable path.
    std::optional<std::pair<int, int>> witness;
};

namespace detail {

inline PairCheck check_pairs(const Graph& g, const std::vector<std::pair<int, int>>& pairs, const std::vector<int>& lengths,
                             int threads)
{
    std::atomic<std::size_t> first_fail{std::numeric_limits<std::size_t>::max()};
    parallel_for(pairs.size(), threads, [&](std::size_t i) {
        if (i > first_fail.load()) return;
        if (!path_with_lengths(g, pairs[i].first, pairs[i].second, lengths)) {
            std::size_t cur = first_fail.load();
            while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
            }
        }
    });
    PairCheck out;
    if (first_fail.load() != std::numeric_limits<std::size_t>::max()) {
        out.holds = false;
        out.witness = pairs[first_fail.load()];
    }
    return out;
}

} // namespace detail

// Every vertex pair is joined by a path with length in `lengths`.
inline PairCheck is_path_connected(const Graph& g, const std::vector<int>& lengths, int threads = 1)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) pairs.emplace_back(u, v);
    return detail::check_pairs(g, pairs, lengths, threads);
}

// Every cross-class pair is joined by a path with length in `lengths` (LA_L).
inline PairCheck is_laceable(const Graph& g, const std::vector<int>& lengths, int threads = 1)
{
    auto b = bipartition(g);
    if (!b) throw InapplicableError("laceability is defined for bipartite graphs only");
    std::vector<std::pair<int, int>> pairs;
    for (int u : b->first)
        for (int v : b->second) pairs.push_back(make_edge(u, v));
    std::sort(pairs.begin(), pairs.end());
    return detail::check_pairs(g, pairs, lengths, threads);
}

inline PairCheck is_hamilton_connected(const Graph& g, int threads = 1)
{
    if (g.order() < 3) throw PreconditionError("is_hamilton_connected: needs f0 >= 3");
    return is_path_connected(g, {g.order() - 1}, threads);
}

inline PairCheck is_hamilton_laceable(const Graph& g, int threads = 1)
{
    return is_laceable(g, {g.order() - 1}, threads);
}

inline bool has_circuit_of_length(const Graph& g, int length, int threads = 1)
{
    return !circuits_of_lengths(g, {length}, {1, threads}).circuits.empty();
}

inline bool is_pancyclic(const Graph& g, int threads = 1)
{
    if (g.order() < 3) throw PreconditionError("is_pancyclic: needs f0 >= 3");
    for (int l = 3; l <= g.order(); ++l)
        if (!has_circuit_of_length(g, l, threads)) return false;
    return true;
}

// Edges that lie on no Hamilton circuit, in canonical order.
inline std::vector<Edge> edges_off_hamilton_circuits(const Graph& g, const SearchOptions& opt = {})
{
    auto hs = hamilton_circuits(g, opt);
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    for (const auto& c : hs.circuits)
        for (auto e : c.edges()) used[static_cast<std::size_t>(g.edge_index(e.first, e.second))] = 1;
    std::vector<Edge> out;
    for (int i = 0; i < g.size(); ++i)
        if (!used[static_cast<std::size_t>(i)]) out.push_back(g.edges()[static_cast<std::size_t>(i)]);
    if (hs.partial && !out.empty())
        throw CapacityError("every_edge_on_hamilton_circuit: circuit cap reached before all edges were covered");
    return out;
}

inline bool every_edge_on_hamilton_circuit(const Graph& g, const SearchOptions& opt = {})
{
    return edges_off_hamilton_circuits(g, opt).empty();
}

} // namespace hamspan

#endif // HAMSPAN_HAMILTON_HPP
