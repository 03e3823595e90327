#ifndef HAMSPAN_FAMILIES_HPP
#define HAMSPAN_FAMILIES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/errors.hpp"
#include "hamspan/graph.hpp"

namespace hamspan {

enum class Family {
    CnSquared,
    CL,
    Pr,
    M,
    PrBoxtimes,
    MBoxtimes,
    PrBoxminus,
    MBoxminus,
    PrBoxminusMinus,
    MBoxminusMinus,
    NCL,
    CE_I1,
    CE_I3,
    XGraph,
    Cayley
};

struct FamilySpec {
    Family family = Family::Pr;
    int size = 0;
    // Cayley only: cyclic orders of the group factors and the connection set.
    std::vector<int> orders;
    std::vector<std::vector<int>> connection;
};

// Vertex names by index, e.g. "x0", "y3", "z'", "a2", "v7".
struct Layout {
    std::vector<std::string> names;

    int index_of(const std::string& name) const
    {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw VertexError("layout has no vertex named '" + name + "'");
        return static_cast<int>(it - names.begin());
    }
};

struct BuiltGraph {
    Graph graph;
    Layout layout;
    // Cayley only: whether the connection set generates the group.
    bool connected = true;
};

// Index arithmetic for the ladder families: x_i -> i, y_i -> r+i (indices mod r),
// z -> 2r for the boxtimes variants, z' -> 2r and z'' -> 2r+1 for the boxminus variants.
struct Ladder {
    int r;
    int x(int i) const { return ((i % r) + r) % r; }
    int y(int i) const { return r + x(i); }
    int z() const { return 2 * r; }
    int zp() const { return 2 * r; }
    int zpp() const { return 2 * r + 1; }
};

namespace detail {

inline std::vector<std::string> ladder_names(int r, int extra)
{
    std::vector<std::string> names;
    for (int i = 0; i < r; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 0; i < r; ++i) names.push_back("y" + std::to_string(i));
    if (extra == 1) names.push_back("z");
    if (extra == 2) {
        names.push_back("z'");
        names.push_back("z''");
    }
    return names;
}

inline void require_ladder(int r)
{
    if (r < 3) throw PreconditionError("ladder families need r >= 3");
}

inline std::vector<Edge> ladder_edges(int r, bool mobius)
{
    Ladder L{r};
    std::vector<Edge> es;
    for (int i = 0; i < r; ++i) {
        es.emplace_back(L.x(i), L.y(i));
        if (i < r - 1) {
            es.emplace_back(L.x(i), L.x(i + 1));
            es.emplace_back(L.y(i), L.y(i + 1));
        }
    }
    if (mobius) {
        es.emplace_back(L.x(0), L.y(r - 1));
        es.emplace_back(L.y(0), L.x(r - 1));
    } else {
        es.emplace_back(L.x(0), L.x(r - 1));
        es.emplace_back(L.y(0), L.y(r - 1));
    }
    return es;
}

inline BuiltGraph from_one_based(int n, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<Edge> es;
    for (auto [a, b] : pairs) es.emplace_back(a - 1, b - 1);
    BuiltGraph out{new_graph(n, es), {}, true};
    for (int k = 1; k <= n; ++k) out.layout.names.push_back("v" + std::to_string(k));
    return out;
}

} // namespace detail

inline BuiltGraph cn_squared(int n)
{
    if (n < 5) throw PreconditionError("C_n^2 needs n >= 5");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.push_back(make_edge(i, (i + 1) % n));
        es.push_back(make_edge(i, (i + 2) % n));
    }
    BuiltGraph out{new_graph(n, es), {}, true};
    for (int i = 0; i < n; ++i) out.layout.names.push_back("v" + std::to_string(i));
    return out;
}

inline BuiltGraph prism(int r)
{
    detail::require_ladder(r);
    return {new_graph(2 * r, detail::ladder_edges(r, false)), {detail::ladder_names(r, 0)}, true};
}

inline BuiltGraph mobius_ladder(int r)
{
    detail::require_ladder(r);
    return {new_graph(2 * r, detail::ladder_edges(r, true)), {detail::ladder_names(r, 0)}, true};
}

inline BuiltGraph boxtimes(int r, bool mobius)
{
    detail::require_ladder(r);
    Ladder L{r};
    auto es = detail::ladder_edges(r, mobius);
    for (int v : {L.x(0), L.y(0), L.x(1), L.y(1)}) es.emplace_back(L.z(), v);
    return {new_graph(2 * r + 1, es), {detail::ladder_names(r, 1)}, true};
}

inline BuiltGraph boxminus(int r, bool mobius)
{
    detail::require_ladder(r);
    Ladder L{r};
    auto es = detail::ladder_edges(r, mobius);
    es.emplace_back(L.x(0), L.zp());
    es.emplace_back(L.y(0), L.zp());
    es.emplace_back(L.x(0), L.zpp());
    es.emplace_back(L.x(1), L.zpp());
    es.emplace_back(L.y(1), L.zpp());
    es.emplace_back(L.zp(), L.zpp());
    return {new_graph(2 * r + 2, es), {detail::ladder_names(r, 2)}, true};
}

// The boxminus variant with the edge x0 z'' removed.
inline BuiltGraph boxminus_minus(int r, bool mobius)
{
    BuiltGraph b = boxminus(r, mobius);
    Ladder L{r};
    b.graph = delete_edge(b.graph, {L.x(0), L.zpp()});
    return b;
}

// a_i -> i, b_i -> r+i; a_i is adjacent to b_{i-1}, b_i and b_{i+1}.
inline BuiltGraph cyclic_ladder(int r)
{
    detail::require_ladder(r);
    std::vector<Edge> es;
    for (int i = 0; i < r; ++i)
        for (int d : {-1, 0, 1}) es.emplace_back(i, r + ((i + d) % r + r) % r);
    BuiltGraph out{new_graph(2 * r, es), {}, true};
    for (int i = 0; i < r; ++i) out.layout.names.push_back("a" + std::to_string(i));
    for (int i = 0; i < r; ++i) out.layout.names.push_back("b" + std::to_string(i));
    return out;
}

// CL_r without a_{r-1}b_0 and a_0b_{r-1}.
inline BuiltGraph non_cyclic_ladder(int r)
{
    BuiltGraph b = cyclic_ladder(r);
    b.graph = delete_edge(delete_edge(b.graph, {r - 1, r}), {0, 2 * r - 1});
    return b;
}

inline BuiltGraph ce_i1()
{
    return detail::from_one_based(7, {{1, 4}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 6}, {5, 6}, {5, 7}, {6, 7}});
}

inline BuiltGraph ce_i3()
{
    return detail::from_one_based(12, {{1, 7}, {1, 8}, {1, 9}, {1, 12}, {2, 7}, {2, 8}, {2, 9}, {3, 7}, {3, 8}, {3, 9},
                                       {4, 9}, {4, 10}, {4, 11}, {5, 10}, {5, 11}, {5, 12}, {6, 10}, {6, 11}, {6, 12}});
}

inline BuiltGraph x_graph()
{
    return detail::from_one_based(7, {{1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {4, 5},
                                      {4, 6}, {4, 7}, {5, 6}, {5, 7}});
}

// Cayley graph on Z/orders[0] (+) ... on the whole group; elements are indexed in
// mixed radix with the first factor most significant.
inline BuiltGraph cayley(const std::vector<int>& orders, const std::vector<std::vector<int>>& connection)
{
    if (orders.empty()) throw PreconditionError("cayley: empty list of cyclic orders");
    long long total = 1;
    for (int o : orders) {
        if (o < 1) throw PreconditionError("cayley: cyclic orders must be positive");
        total *= o;
        if (total > 64) throw CapacityError("cayley: group order exceeds 64");
    }
    const int n = static_cast<int>(total);
    const std::size_t k = orders.size();
    auto encode = [&](const std::vector<int>& t) {
        int idx = 0;
        for (std::size_t j = 0; j < k; ++j) idx = idx * orders[j] + ((t[j] % orders[j]) + orders[j]) % orders[j];
        return idx;
    };
    auto decode = [&](int idx) {
        std::vector<int> t(k);
        for (std::size_t j = k; j-- > 0;) {
            t[j] = idx % orders[j];
            idx /= orders[j];
        }
        return t;
    };
    std::vector<int> s_idx;
    for (const auto& s : connection) {
        if (s.size() != k) throw PreconditionError("cayley: connection element has the wrong number of coordinates");
        s_idx.push_back(encode(s));
    }
    std::sort(s_idx.begin(), s_idx.end());
    s_idx.erase(std::unique(s_idx.begin(), s_idx.end()), s_idx.end());
    for (int s : s_idx) {
        if (s == 0) throw PreconditionError("cayley: the identity lies in the connection set");
        auto t = decode(s);
        for (auto& c : t) c = -c;
        if (!std::binary_search(s_idx.begin(), s_idx.end(), encode(t)))
            throw PreconditionError("cayley: connection set is not closed under negation");
    }
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a) {
        auto ta = decode(a);
        for (int s : s_idx) {
            auto ts = decode(s);
            std::vector<int> sum(k);
            for (std::size_t j = 0; j < k; ++j) sum[j] = ta[j] + ts[j];
            int b = encode(sum);
            if (a < b) es.emplace_back(a, b);
        }
    }
    BuiltGraph out{new_graph(n, es), {}, true};
    for (int a = 0; a < n; ++a) {
        auto t = decode(a);
        std::string name;
        if (k == 1) {
            name = std::to_string(t[0]);
        } else {
            name = "(";
            for (std::size_t j = 0; j < k; ++j) name += (j ? "," : "") + std::to_string(t[j]);
            name += ")";
        }
        out.layout.names.push_back(name);
    }
    out.connected = is_connected(out.graph);
    return out;
}

inline BuiltGraph build(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::CnSquared: return cn_squared(spec.size);
    case Family::CL: return cyclic_ladder(spec.size);
    case Family::Pr: return prism(spec.size);
    case Family::M: return mobius_ladder(spec.size);
    case Family::PrBoxtimes: return boxtimes(spec.size, false);
    case Family::MBoxtimes: return boxtimes(spec.size, true);
    case Family::PrBoxminus: return boxminus(spec.size, false);
    case Family::MBoxminus: return boxminus(spec.size, true);
    case Family::PrBoxminusMinus: return boxminus_minus(spec.size, false);
    case Family::MBoxminusMinus: return boxminus_minus(spec.size, true);
    case Family::NCL: return non_cyclic_ladder(spec.size);
    case Family::CE_I1: return ce_i1();
    case Family::CE_I3: return ce_i3();
    case Family::XGraph: return x_graph();
    case Family::Cayley: return cayley(spec.orders, spec.connection);
    }
    throw PreconditionError("unknown family");
}

namespace detail {

inline int parse_int(const std::string& s, const std::string& what)
{
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(what + ": '" + s + "' is not an integer");
    }
    if (pos != s.size()) throw ParseError(what + ": '" + s + "' is not an integer");
    return v;
}

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

} // namespace detail

// CLI family names: cn2:<n>, cl:<r>, pr:<r>, m:<r>, pr-boxtimes:<r>, m-boxtimes:<r>,
// pr-boxminus:<r>, m-boxminus:<r>, ncl:<r>, ce-i1, ce-i3, x7, and
// cayley:<orders>:<S> with orders joined by 'x' and S a comma-separated list of
// elements whose coordinates are joined by '/', e.g. cayley:2x4:1/0,0/1,0/3.
inline FamilySpec parse_family(const std::string& text)
{
    static const std::map<std::string, Family> sized{
        {"cn2", Family::CnSquared},          {"cl", Family::CL},
        {"pr", Family::Pr},                  {"m", Family::M},
        {"pr-boxtimes", Family::PrBoxtimes}, {"m-boxtimes", Family::MBoxtimes},
        {"pr-boxminus", Family::PrBoxminus}, {"m-boxminus", Family::MBoxminus},
        {"pr-boxminus-minus", Family::PrBoxminusMinus}, {"m-boxminus-minus", Family::MBoxminusMinus},
        {"ncl", Family::NCL}};
    FamilySpec spec;
    if (text == "ce-i1") {
        spec.family = Family::CE_I1;
        return spec;
    }
    if (text == "ce-i3") {
        spec.family = Family::CE_I3;
        return spec;
    }
    if (text == "x7") {
        spec.family = Family::XGraph;
        return spec;
    }
    auto parts = detail::split(text, ':');
    if (parts.size() == 3 && parts[0] == "cayley") {
        spec.family = Family::Cayley;
        for (const auto& o : detail::split(parts[1], 'x')) spec.orders.push_back(detail::parse_int(o, "cayley order"));
        if (!parts[2].empty()) {
            for (const auto& el : detail::split(parts[2], ',')) {
                std::vector<int> coords;
                for (const auto& c : detail::split(el, '/')) coords.push_back(detail::parse_int(c, "cayley element"));
                spec.connection.push_back(coords);
            }
        }
        return spec;
    }
    if (parts.size() == 2) {
        auto it = sized.find(parts[0]);
        if (it != sized.end()) {
            spec.family = it->second;
            spec.size = detail::parse_int(parts[1], "family size");
            return spec;
        }
    }
    throw ParseError("unknown family '" + text + "'");
}

inline std::string family_name(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::CnSquared: return "cn2:" + std::to_string(spec.size);
    case Family::CL: return "cl:" + std::to_string(spec.size);
    case Family::Pr: return "pr:" + std::to_string(spec.size);
    case Family::M: return "m:" + std::to_string(spec.size);
    case Family::PrBoxtimes: return "pr-boxtimes:" + std::to_string(spec.size);
    case Family::MBoxtimes: return "m-boxtimes:" + std::to_string(spec.size);
    case Family::PrBoxminus: return "pr-boxminus:" + std::to_string(spec.size);
    case Family::MBoxminus: return "m-boxminus:" + std::to_string(spec.size);
    case Family::PrBoxminusMinus: return "pr-boxminus-minus:" + std::to_string(spec.size);
    case Family::MBoxminusMinus: return "m-boxminus-minus:" + std::to_string(spec.size);
    case Family::NCL: return "ncl:" + std::to_string(spec.size);
    case Family::CE_I1: return "ce-i1";
    case Family::CE_I3: return "ce-i3";
    case Family::XGraph: return "x7";
    case Family::Cayley: {
        std::string s = "cayley:";
        for (std::size_t j = 0; j < spec.orders.size(); ++j) s += (j ? "x" : "") + std::to_string(spec.orders[j]);
        s += ":";
        for (std::size_t i = 0; i < spec.connection.size(); ++i) {
            s += i ? "," : "";
            for (std::size_t j = 0; j < spec.connection[i].size(); ++j)
                s += (j ? "/" : "") + std::to_string(spec.connection[i][j]);
        }
        return s;
    }
    }
    return "?";
}

// True iff no symmetric S in Z/n \ {0} with |S| equal to the common degree of g
// yields a Cayley graph isomorphic to g. Exhaustive over connection sets.
inline bool not_cayley_on_cyclic(const Graph& g, int n)
{
    if (n < 1 || n > 16) throw CapacityError("not_cayley_on_cyclic: n must lie in 1..16");
    if (g.order() != n) throw PreconditionError("not_cayley_on_cyclic: graph order differs from n");
    if (!is_regular(g)) throw InapplicableError("not_cayley_on_cyclic: graph is not regular, hence not a Cayley graph");
    const int d = n == 0 ? 0 : g.degree(0);
    // Orbits of negation on Z/n \ {0}: {s, n-s}, a singleton when 2s == n.
    std::vector<std::vector<int>> orbits;
    for (int s = 1; 2 * s <= n; ++s) {
        if (2 * s == n) orbits.push_back({s});
        else orbits.push_back({s, n - s});
    }
    std::vector<std::vector<int>> chosen;
    bool found = false;
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (found) return;
        if (left == 0) {
            std::vector<std::vector<int>> conn;
            for (const auto& o : chosen)
                for (int s : o) conn.push_back({s});
            BuiltGraph c = cayley({n}, conn);
            if (find_isomorphism(g, c.graph)) found = true;
            return;
        }
        if (i == orbits.size() || left < 0) return;
        chosen.push_back(orbits[i]);
        self(self, i + 1, left - static_cast<int>(orbits[i].size()));
        chosen.pop_back();
        self(self, i + 1, left);
    };
    rec(rec, 0, d);
    return !found;
}

} // namespace hamspan

#endif // HAMSPAN_FAMILIES_HPP
