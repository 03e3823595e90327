#ifndef HAMSPAN_STRUCTURE_HPP
#define HAMSPAN_STRUCTURE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/cycle_space.hpp"
#include "hamspan/errors.hpp"
#include "hamspan/families.hpp"
#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/hamilton.hpp"
#include "hamspan/report.hpp"

namespace hamspan {

// ---------------------------------------------------------------------------
// CB families: two lists of Hamilton circuits of the boxed ladders whose chains
// together span a subspace of dimension r + 4.

enum class CBVariant { PrBoxtimes, MBoxtimes, PrBoxminus, MBoxminus };

inline const char* cb_variant_name(CBVariant v)
{
    switch (v) {
    case CBVariant::PrBoxtimes: return "pr-boxtimes";
    case CBVariant::MBoxtimes: return "m-boxtimes";
    case CBVariant::PrBoxminus: return "pr-boxminus";
    case CBVariant::MBoxminus: return "m-boxminus";
    }
    return "?";
}

inline bool is_mobius(CBVariant v) { return v == CBVariant::MBoxtimes || v == CBVariant::MBoxminus; }
inline bool is_boxminus(CBVariant v) { return v == CBVariant::PrBoxminus || v == CBVariant::MBoxminus; }

struct CBFamily {
    CBVariant variant;
    int r = 0;
    BuiltGraph host;
    CircuitSet cb1;
    CircuitSet cb2;
};

inline void require_cb_parity(CBVariant v, int r)
{
    if (is_mobius(v)) {
        if (r < 5 || r % 2 == 0) throw PreconditionError("Moebius-ladder variants need odd r >= 5");
    } else if (r < 4 || r % 2 != 0) {
        throw PreconditionError("prism variants need even r >= 4");
    }
}

inline BuiltGraph cb_host(CBVariant v, int r)
{
    return is_boxminus(v) ? boxminus(r, is_mobius(v)) : boxtimes(r, is_mobius(v));
}

namespace detail {

enum Side { SideX = 0, SideY = 1 };

struct LadderWalk {
    Ladder L;
    bool mobius;
    std::vector<int> seq;

    int at(int side, int i) const { return side == SideX ? L.x(i) : L.y(i); }

    LadderWalk& add(int v)
    {
        seq.push_back(v);
        return *this;
    }

    // Visits the given columns two vertices at a time, entering each column on
    // the side where the previous one was left. Crossing between columns r-1
    // and 0 of a Moebius ladder swaps the sides.
    LadderWalk& zig(const std::vector<int>& cols, int first_side)
    {
        int side = first_side;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (k > 0 && mobius) {
                const int a = cols[k - 1], b = cols[k];
                if ((a == L.r - 1 && b == 0) || (a == 0 && b == L.r - 1)) side = 1 - side;
            }
            seq.push_back(at(side, cols[k]));
            seq.push_back(at(1 - side, cols[k]));
            side = 1 - side;
        }
        return *this;
    }

    LadderWalk& rail(int side, int from, int to)
    {
        const int step = from <= to ? 1 : -1;
        for (int i = from;; i += step) {
            seq.push_back(at(side, i));
            if (i == to) break;
        }
        return *this;
    }
};

inline std::vector<int> columns(int from, int to)
{
    std::vector<int> out;
    const int step = from <= to ? 1 : -1;
    for (int i = from;; i += step) {
        out.push_back(i);
        if (i == to) break;
    }
    return out;
}

inline Circuit hamilton_member(const Graph& g, const std::vector<int>& seq, const std::string& what)
{
    Circuit c;
    try {
        c = Circuit::make(g, seq);
    } catch (const CircuitError& e) {
        throw Error("CB construction bug in " + what + ": " + e.what());
    }
    if (static_cast<int>(c.length()) != g.order())
        throw Error("CB construction bug in " + what + ": circuit is not Hamiltonian");
    return c;
}

} // namespace detail

inline CBFamily build_cb(CBVariant variant, int r)
{
    require_cb_parity(variant, r);
    const bool mob = is_mobius(variant);
    CBFamily f{variant, r, cb_host(variant, r), {}, {}};
    const Graph& g = f.host.graph;
    const Ladder L{r};
    using detail::SideX;
    using detail::SideY;
    // Side of column r-1 that is adjacent to x0.
    const int s0 = mob ? SideY : SideX;
    const int s1 = 1 - s0;
    auto walk = [&] { return detail::LadderWalk{L, mob, {}}; };
    auto all_but_zero = detail::columns(1, r - 1);
    auto wrap_from_one = all_but_zero;
    wrap_from_one.push_back(0);
    auto wrap_from_two = detail::columns(2, r - 1);
    wrap_from_two.push_back(0);
    const std::string tag = cb_variant_name(variant);

    std::vector<std::vector<int>> first;
    std::vector<std::vector<int>> second;
    if (!is_boxminus(variant)) {
        const int z = L.z();
        first.push_back(walk().add(z).zig(wrap_from_one, SideY).seq);
        first.push_back(walk().add(z).add(L.x(1)).zig(wrap_from_two, SideX).add(L.y(1)).seq);
        first.push_back(walk().add(z).zig(wrap_from_one, SideX).seq);
        first.push_back(walk().add(z).add(L.x(0)).zig(all_but_zero, SideX).add(L.y(0)).seq);
        first.push_back(walk().add(z).add(L.y(1)).zig(wrap_from_two, SideY).add(L.x(1)).seq);
        for (int i = 1; i <= r - 2; ++i) {
            second.push_back(walk()
                                 .add(z)
                                 .add(L.x(0))
                                 .rail(s0, r - 1, i + 1)
                                 .rail(s1, i + 1, r - 1)
                                 .add(L.y(0))
                                 .rail(SideY, 1, i)
                                 .rail(SideX, i, 1)
                                 .seq);
        }
        // The last member breaks the pattern of the others.
        second.push_back(walk().add(z).rail(SideX, 0, r - 1).rail(SideY, r - 1, 0).seq);
    } else {
        const int zp = L.zp(), zpp = L.zpp();
        first.push_back(walk().add(zp).add(L.x(0)).add(zpp).rail(SideX, 1, r - 1).rail(SideY, r - 1, 0).seq);
        first.push_back(
            walk().add(zp).add(zpp).add(L.x(0)).rail(s0, r - 1, 1).rail(s1, 1, r - 1).add(L.y(0)).seq);
        first.push_back(walk().add(zp).add(L.x(0)).add(zpp).zig(all_but_zero, SideX).add(L.y(0)).seq);
        first.push_back(walk().add(zp).add(zpp).rail(SideX, 1, r - 1).rail(SideY, r - 1, 0).add(L.x(0)).seq);
        first.push_back(walk()
                            .add(zp)
                            .add(L.x(0))
                            .zig(detail::columns(r - 1, 2), s0)
                            .add(L.x(1))
                            .add(zpp)
                            .add(L.y(1))
                            .add(L.y(0))
                            .seq);
        for (int i = 1; i <= r - 2; ++i) {
            second.push_back(walk()
                                 .add(zp)
                                 .add(L.x(0))
                                 .rail(s0, r - 1, i + 1)
                                 .rail(s1, i + 1, r - 1)
                                 .add(L.y(0))
                                 .rail(SideY, 1, i)
                                 .rail(SideX, i, 1)
                                 .add(zpp)
                                 .seq);
        }
        second.push_back(walk().add(zp).add(zpp).rail(SideX, 0, r - 1).rail(SideY, r - 1, 0).seq);
    }
    for (std::size_t k = 0; k < first.size(); ++k)
        f.cb1.push_back(detail::hamilton_member(g, first[k], tag + " CB1 member " + std::to_string(k + 1)));
    for (std::size_t k = 0; k < second.size(); ++k)
        f.cb2.push_back(detail::hamilton_member(g, second[k], tag + " CB2 member " + std::to_string(k + 1)));
    return f;
}

// Rows of the designated 5x5 minor of the CB1 chain matrix, as edges of the host.
inline std::vector<Edge> cb_minor_rows(CBVariant v, int r)
{
    const Ladder L{r};
    if (is_boxminus(v)) {
        return {make_edge(L.x(0), L.y(0)), make_edge(L.x(1), L.y(1)), make_edge(L.zp(), L.x(0)),
                make_edge(L.zpp(), L.y(1)),
                is_mobius(v) ? make_edge(L.x(0), L.y(r - 1)) : make_edge(L.x(0), L.x(r - 1))};
    }
    return {make_edge(L.x(0), L.y(0)), make_edge(L.x(1), L.y(1)), make_edge(L.z(), L.x(1)), make_edge(L.z(), L.y(1)),
            is_mobius(v) ? make_edge(L.x(0), L.y(r - 1)) : make_edge(L.y(0), L.y(r - 1))};
}

// Submatrix of the chain matrix of `circuits` (one column per circuit) on the given edge rows.
inline GF2Matrix chain_minor(const Graph& g, const CircuitSet& circuits, const std::vector<Edge>& rows)
{
    GF2Matrix m;
    for (std::size_t j = 0; j < circuits.size(); ++j) m.column_labels.push_back("C" + std::to_string(j + 1));
    const auto chains = chains_of(g, circuits);
    for (auto e : rows) {
        const int idx = g.edge_index(e.first, e.second);
        if (idx < 0) throw EdgeMissingError("chain_minor: row edge is not in the graph");
        BitVector row(circuits.size());
        for (std::size_t j = 0; j < chains.size(); ++j)
            if (chains[j].test(static_cast<std::size_t>(idx))) row.set(j);
        m.rows.push_back(row);
    }
    return m;
}

struct CBExpectation {
    GF2Matrix minor;
    GF2Matrix inverse;
};

namespace detail {

inline std::string matrix_diff(const GF2Matrix& got, const GF2Matrix& want)
{
    std::string out;
    if (got.row_count() != want.row_count() || got.column_count() != want.column_count())
        return "shape " + std::to_string(got.row_count()) + "x" + std::to_string(got.column_count()) + " vs " +
               std::to_string(want.row_count()) + "x" + std::to_string(want.column_count());
    for (std::size_t i = 0; i < got.row_count(); ++i)
        for (std::size_t j = 0; j < got.column_count(); ++j)
            if (got.at(i, j) != want.at(i, j))
                out += (out.empty() ? "" : " ") + std::string("(") + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")";
    return out;
}

} // namespace detail

// Independence, minor and directness checks for one CB family. `expect` holds
// the reference minor and inverse (from fixtures) for the CB1 part.
inline VerificationReport verify_cb_independence(const CBFamily& f, const std::optional<CBExpectation>& expect)
{
    Stopwatch clock;
    VerificationReport rep(std::string("cb.") + cb_variant_name(f.variant) + ".r=" + std::to_string(f.r));
    const Graph& g = f.host.graph;
    const auto c1 = chains_of(g, f.cb1);
    const auto c2 = chains_of(g, f.cb2);
    auto both = c1;
    both.insert(both.end(), c2.begin(), c2.end());
    bool all_cycles = true;
    for (const auto& c : both) all_cycles = all_cycles && is_cycle(g, c);
    rep.expect("cb1.size", f.cb1.size(), 5, Provenance::Paper);
    rep.expect("cb2.size", f.cb2.size(), f.r - 1, Provenance::Paper);
    rep.expect("chains_are_cycles", all_cycles, true, Provenance::Trivial);
    rep.expect("rank.cb1", rank(c1), 5, Provenance::Paper);
    rep.expect("rank.cb2", rank(c2), f.r - 1, Provenance::Paper);
    const std::size_t union_rank = rank(both);
    if (is_mobius(f.variant)) {
        // On the Moebius variants the two lists share a nonzero vector, so the
        // sum is not direct; the witness names the first dependent CB2 member.
        rep.observe("rank.union", union_rank, f.r + 4, Provenance::Paper,
                    "the sum of the two spans is not direct on this variant");
        if (union_rank != static_cast<std::size_t>(f.r + 4)) {
            for (std::size_t k = 0; k < c2.size(); ++k) {
                std::vector<EdgeVector> before = c1;
                before.insert(before.end(), c2.begin(), c2.begin() + static_cast<std::ptrdiff_t>(k));
                if (auto co = in_span(c2[k], before)) {
                    std::vector<std::string> terms;
                    for (std::size_t i = 0; i < before.size(); ++i)
                        if (co->test(i)) terms.push_back(i < 5 ? "cb1." + std::to_string(i + 1) : "cb2." + std::to_string(i - 4));
                    rep.record("dependency.member", "cb2." + std::to_string(k + 1));
                    rep.record("dependency.sum_of", terms);
                    break;
                }
            }
        }
    } else {
        rep.expect("rank.union", union_rank, f.r + 4, Provenance::Paper);
    }
    const int ambient = betti1(g);
    rep.expect("betti1", ambient, is_boxminus(f.variant) ? f.r + 5 : f.r + 4, Provenance::Derived);

    const GF2Matrix minor = chain_minor(g, f.cb1, cb_minor_rows(f.variant, f.r));
    rep.record("minor", minor.row_strings());
    const auto inverse = invert_5x5(minor);
    rep.expect("minor.nonsingular", inverse.has_value(), true, Provenance::Paper);
    if (expect) {
        const std::string d = detail::matrix_diff(minor, expect->minor);
        rep.expect("minor.matches_reference", d.empty(), true, Provenance::Paper);
        if (!d.empty()) rep.notes.push_back("minor differs at " + d);
        if (inverse) {
            const std::string di = detail::matrix_diff(*inverse, expect->inverse);
            rep.record("inverse", inverse->row_strings());
            rep.expect("inverse.matches_reference", di.empty(), true, Provenance::Paper);
            if (!di.empty()) rep.notes.push_back("inverse differs at " + di);
        }
    }

    // Rows x_i y_i (i = 1..r-1) of the CB2 matrix form a unit lower bidiagonal band.
    const Ladder L{f.r};
    std::vector<Edge> rungs;
    for (int i = 1; i <= f.r - 1; ++i) rungs.push_back(make_edge(L.x(i), L.y(i)));
    const GF2Matrix band = chain_minor(g, f.cb2, rungs);
    bool bidiagonal = true;
    for (std::size_t i = 0; i < band.row_count(); ++i)
        for (std::size_t j = 0; j < band.column_count(); ++j)
            bidiagonal = bidiagonal && band.at(i, j) == (i == j || i == j + 1);
    rep.expect("cb2.rung_minor_bidiagonal", bidiagonal, true, Provenance::Paper);
    rep.elapsed = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Non-separating induced circuits.

namespace detail {

struct ChordlessWalker {
    const Graph& g;
    std::size_t cap;
    std::vector<int> path;
    std::uint64_t on_path = 0;
    std::vector<std::vector<int>> found;
    bool overflow = false;

    void extend(int start)
    {
        if (overflow) return;
        const int last = path.back();
        // Vertices adjacent to an interior vertex of the path cannot be appended.
        std::uint64_t blocked = on_path;
        for (std::size_t k = 1; k + 1 < path.size(); ++k) blocked |= g.mask(path[k]);
        for (int w : g.neighbours(last)) {
            if (w <= start || (blocked >> w & 1U)) continue;
            if (g.adjacent(w, start)) {
                if (path.size() >= 2 && path[1] < w) {
                    if (found.size() >= cap) {
                        overflow = true;
                        return;
                    }
                    auto cyc = path;
                    cyc.push_back(w);
                    found.push_back(std::move(cyc));
                }
                continue;
            }
            path.push_back(w);
            on_path |= std::uint64_t{1} << w;
            extend(start);
            on_path &= ~(std::uint64_t{1} << w);
            path.pop_back();
            if (overflow) return;
        }
    }
};

} // namespace detail

// Chordless circuits (length >= 3) in canonical form, sorted.
inline CircuitSet chordless_circuits(const Graph& g, const SearchOptions& opt = {})
{
    detail::require_masks(g, "chordless_circuits");
    const int n = g.order();
    std::vector<std::vector<std::vector<int>>> parts(static_cast<std::size_t>(n));
    std::vector<char> capped(static_cast<std::size_t>(n), 0);
    parallel_for(static_cast<std::size_t>(n), opt.threads, [&](std::size_t s) {
        const int start = static_cast<int>(s);
        detail::ChordlessWalker w{g, opt.cap + 1, {start}, std::uint64_t{1} << start, {}, false};
        for (int v : g.neighbours(start)) {
            if (v <= start) continue;
            w.path = {start, v};
            w.on_path = (std::uint64_t{1} << start) | (std::uint64_t{1} << v);
            w.extend(start);
            if (w.overflow) break;
        }
        parts[s] = std::move(w.found);
        capped[s] = w.overflow;
    });
    auto merged = detail::merge_capped(parts, opt.cap, std::find(capped.begin(), capped.end(), 1) != capped.end());
    if (merged.partial) throw CapacityError("chordless_circuits: cap exceeded");
    return merged.circuits;
}

inline bool is_nonseparating(const Graph& g, const Circuit& c)
{
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    for (int v : c.vertices()) removed[static_cast<std::size_t>(v)] = 1;
    return component_count(g, removed) <= 1;
}

inline CircuitSet nonseparating_induced_circuits(const Graph& g, const SearchOptions& opt = {})
{
    CircuitSet out;
    for (const auto& c : chordless_circuits(g, opt))
        if (is_nonseparating(g, c)) out.push_back(c);
    return out;
}

// Number of circuits of `circuits` through each edge, in edge order.
inline std::vector<int> edge_counts(const Graph& g, const CircuitSet& circuits)
{
    std::vector<int> counts(static_cast<std::size_t>(g.size()), 0);
    for (const auto& c : circuits)
        for (auto e : c.edges()) ++counts[static_cast<std::size_t>(g.edge_index(e.first, e.second))];
    return counts;
}

inline VerificationReport verify_tutte_generation(const Graph& g, const SearchOptions& opt = {})
{
    Stopwatch clock;
    if (!is_k_connected(g, 3)) throw InapplicableError("verify_tutte_generation: graph is not 3-connected");
    VerificationReport rep("tutte");
    const auto nsi = nonseparating_induced_circuits(g, opt);
    rep.record("nsi.count", nsi.size());
    rep.expect("nsi.rank", rank(chains_of(g, nsi)), betti1(g), Provenance::Derived);
    rep.elapsed = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Hamilton circuits of an even prism whose sums give the non-separating
// induced circuits.

struct PrismSums {
    int r = 0;
    BuiltGraph host;
    Circuit wave_x;  // starts x0 x1 y1 y2 ...
    Circuit wave_y;  // starts y0 y1 x1 x2 ...
    std::vector<Circuit> shifted;  // shifted[i]: x_i .. x_{i+r-1} then y back to y_i
    Circuit rail_x;
    Circuit rail_y;
    std::vector<Circuit> squares;  // squares[i]: x_i x_{i+1} y_{i+1} y_i
};

inline PrismSums prism_sums(int r)
{
    if (r < 4 || r % 2 != 0) throw PreconditionError("prism identities need even r >= 4");
    PrismSums p;
    p.r = r;
    p.host = prism(r);
    const Graph& g = p.host.graph;
    const Ladder L{r};
    auto walk = [&] { return detail::LadderWalk{L, false, {}}; };
    p.wave_x = Circuit::make(g, walk().add(L.x(0)).zig(detail::columns(1, r - 1), detail::SideX).add(L.y(0)).seq);
    p.wave_y = Circuit::make(g, walk().add(L.y(0)).zig(detail::columns(1, r - 1), detail::SideY).add(L.x(0)).seq);
    for (int i = 0; i < r; ++i) {
        std::vector<int> seq;
        for (int k = 0; k < r; ++k) seq.push_back(L.x(i + k));
        for (int k = r - 1; k >= 0; --k) seq.push_back(L.y(i + k));
        p.shifted.push_back(Circuit::make(g, seq));
        p.squares.push_back(Circuit::make(g, {L.x(i), L.x(i + 1), L.y(i + 1), L.y(i)}));
    }
    std::vector<int> xs, ys;
    for (int i = 0; i < r; ++i) {
        xs.push_back(L.x(i));
        ys.push_back(L.y(i));
    }
    p.rail_x = Circuit::make(g, xs);
    p.rail_y = Circuit::make(g, ys);
    return p;
}

inline CircuitSet prism_nsi_list(int r)
{
    const PrismSums p = prism_sums(r);
    CircuitSet out{p.rail_x, p.rail_y};
    out.insert(out.end(), p.squares.begin(), p.squares.end());
    normalize(out);
    return out;
}

inline VerificationReport verify_symdiff_identities(int r)
{
    Stopwatch clock;
    const PrismSums p = prism_sums(r);
    VerificationReport rep("symdiff.r=" + std::to_string(r));
    const Graph& g = p.host.graph;
    auto ch = [&](const Circuit& c) { return circuit_to_chain(g, c); };
    const int n = g.order();
    bool all_ham = static_cast<int>(p.wave_x.length()) == n && static_cast<int>(p.wave_y.length()) == n;
    for (const auto& h : p.shifted) all_ham = all_ham && static_cast<int>(h.length()) == n;
    rep.expect("summands_hamiltonian", all_ham, true, Provenance::Paper);

    std::vector<std::int64_t> square_failures;
    for (int i = 0; i < r; ++i) {
        const EdgeVector sum = ch(p.wave_x) ^ ch(p.wave_y) ^ ch(p.shifted[static_cast<std::size_t>((i + 1) % r)]);
        if (sum != ch(p.squares[static_cast<std::size_t>(i)])) square_failures.push_back(i);
    }
    rep.expect("square_identity.failing_i", square_failures, std::vector<std::int64_t>{}, Provenance::Paper);

    EdgeVector sigma(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < r / 2; ++i) sigma ^= ch(p.shifted[static_cast<std::size_t>(2 * i)]);
    const bool zero_mod_four = r % 4 == 0;
    rep.record("branch", zero_mod_four ? "r=0 mod 4" : "r=2 mod 4");
    const Circuit& for_x = zero_mod_four ? p.wave_x : p.wave_y;
    const Circuit& for_y = zero_mod_four ? p.wave_y : p.wave_x;
    rep.expect("rail_x_identity", (ch(for_x) ^ sigma) == ch(p.rail_x), true, Provenance::Paper);
    rep.expect("rail_y_identity", (ch(for_y) ^ sigma) == ch(p.rail_y), true, Provenance::Paper);

    // Membership counts of the edges in the summands H_0, H_2, ..., H_{r-2}.
    const Ladder L{r};
    std::vector<std::int64_t> rung_counts, even_rail, odd_rail;
    for (int i0 = 0; i0 < r; ++i0) {
        auto count = [&](Edge e) {
            const auto idx = static_cast<std::size_t>(g.edge_index(e.first, e.second));
            std::int64_t c = 0;
            for (int i = 0; i < r / 2; ++i) c += ch(p.shifted[static_cast<std::size_t>(2 * i)]).test(idx);
            return c;
        };
        rung_counts.push_back(count(make_edge(L.x(i0), L.y(i0))));
        const std::int64_t cx = count(make_edge(L.x(i0), L.x(i0 + 1)));
        const std::int64_t cy = count(make_edge(L.y(i0), L.y(i0 + 1)));
        (i0 % 2 == 0 ? even_rail : odd_rail).push_back(cx);
        (i0 % 2 == 0 ? even_rail : odd_rail).push_back(cy);
    }
    rep.expect("claim.rungs_in_one_summand", rung_counts, std::vector<std::int64_t>(static_cast<std::size_t>(r), 1),
               Provenance::Paper);
    rep.expect("claim.even_rail_edges_in_all", even_rail, std::vector<std::int64_t>(static_cast<std::size_t>(r), r / 2),
               Provenance::Paper);
    rep.expect("claim.odd_rail_edges_in_all_but_one", odd_rail,
               std::vector<std::int64_t>(static_cast<std::size_t>(r), r / 2 - 1), Provenance::Paper);
    rep.elapsed = clock.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// Bandwidth labellings and zero-free colourings.

struct Labelling {
    std::vector<int> b;  // vertex -> position in 1..f0
    std::vector<int> h;  // vertex -> colour in 0..rho
    int c1 = 1;
    int c2 = 1;
    int rho = 2;
};

inline Labelling boxtimes_labelling(int r)
{
    const Ladder L{r};
    Labelling lab;
    lab.b.assign(static_cast<std::size_t>(2 * r + 1), 0);
    lab.h.assign(static_cast<std::size_t>(2 * r + 1), 0);
    lab.b[static_cast<std::size_t>(L.z())] = 1;
    lab.b[static_cast<std::size_t>(L.x(0))] = 2;
    lab.b[static_cast<std::size_t>(L.y(0))] = 3;
    for (int i = 1; i < r; ++i) {
        const bool front = i <= r / 2;
        lab.b[static_cast<std::size_t>(L.x(i))] = front ? 4 * i : 4 * (r - i) + 2;
        lab.b[static_cast<std::size_t>(L.y(i))] = front ? 4 * i + 1 : 4 * (r - i) + 3;
    }
    for (int i = 0; i < r; ++i) {
        lab.h[static_cast<std::size_t>(L.x(i))] = i % 2 == 0 ? 1 : 2;
        lab.h[static_cast<std::size_t>(L.y(i))] = i % 2 == 0 ? 2 : 1;
    }
    return lab;
}

inline Labelling boxminus_labelling(int r)
{
    const Ladder L{r};
    Labelling lab;
    lab.b.assign(static_cast<std::size_t>(2 * r + 2), 0);
    lab.h.assign(static_cast<std::size_t>(2 * r + 2), 0);
    lab.b[static_cast<std::size_t>(L.zp())] = 1;
    lab.b[static_cast<std::size_t>(L.zpp())] = 2;
    lab.b[static_cast<std::size_t>(L.x(0))] = 3;
    lab.b[static_cast<std::size_t>(L.y(0))] = 4;
    for (int i = 1; i < r; ++i) {
        const bool front = i <= r / 2;
        lab.b[static_cast<std::size_t>(L.x(i))] = front ? 4 * i + 1 : 4 * (r - i) + 3;
        lab.b[static_cast<std::size_t>(L.y(i))] = front ? 4 * i + 2 : 4 * (r - i) + 4;
    }
    lab.h[static_cast<std::size_t>(L.zp())] = 2;
    lab.h[static_cast<std::size_t>(L.zpp())] = 0;
    lab.h[static_cast<std::size_t>(L.x(0))] = 1;
    lab.h[static_cast<std::size_t>(L.y(0))] = 2;
    lab.h[static_cast<std::size_t>(L.x(1))] = 0;
    lab.h[static_cast<std::size_t>(L.y(1))] = 1;
    for (int i = 2; i < r; ++i) {
        lab.h[static_cast<std::size_t>(L.x(i))] = i % 2 == 0 ? 1 : 2;
        lab.h[static_cast<std::size_t>(L.y(i))] = i % 2 == 0 ? 2 : 1;
    }
    return lab;
}

struct LabellingCheck {
    bool bijective = false;
    int max_stretch = 0;
    bool proper = false;
    std::vector<Edge> monochromatic;
    std::vector<int> zero_positions;  // sorted b-values of colour-0 vertices
    bool zero_free = false;
    // Largest forward distance needed to reach a zero-free window start.
    int max_steps = 0;
};

inline LabellingCheck check_labelling(const Graph& g, const Labelling& lab)
{
    const int n = g.order();
    if (static_cast<int>(lab.b.size()) != n || static_cast<int>(lab.h.size()) != n)
        throw PreconditionError("labelling is not total on the vertex set");
    LabellingCheck out;
    std::vector<int> at(static_cast<std::size_t>(n) + 1, -1);
    out.bijective = true;
    for (int v = 0; v < n; ++v) {
        const int p = lab.b[static_cast<std::size_t>(v)];
        if (p < 1 || p > n || at[static_cast<std::size_t>(p)] != -1) {
            out.bijective = false;
            continue;
        }
        at[static_cast<std::size_t>(p)] = v;
    }
    if (!out.bijective) return out;
    out.proper = true;
    for (auto [u, v] : g.edges()) {
        out.max_stretch = std::max(out.max_stretch, std::abs(lab.b[static_cast<std::size_t>(u)] - lab.b[static_cast<std::size_t>(v)]));
        if (lab.h[static_cast<std::size_t>(u)] == lab.h[static_cast<std::size_t>(v)]) {
            out.proper = false;
            out.monochromatic.push_back({u, v});
        }
    }
    for (int v = 0; v < n; ++v)
        if (lab.h[static_cast<std::size_t>(v)] == 0) out.zero_positions.push_back(lab.b[static_cast<std::size_t>(v)]);
    std::sort(out.zero_positions.begin(), out.zero_positions.end());

    auto colour_at = [&](int p) { return lab.h[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])]; };
    auto window_clear = [&](int q) {
        for (int p = q; p <= std::min(n, q + lab.c2); ++p)
            if (colour_at(p) == 0) return false;
        return true;
    };
    out.zero_free = true;
    for (int p = 1; p <= n; ++p) {
        int steps = -1;
        for (int q = p; q <= std::min(n, p + lab.c1); ++q) {
            if (window_clear(q)) {
                steps = q - p;
                break;
            }
        }
        if (steps < 0) {
            out.zero_free = false;
        } else {
            out.max_steps = std::max(out.max_steps, steps);
        }
    }
    return out;
}

inline VerificationReport verify_labelling(const Graph& g, const Labelling& lab, int bw_bound)
{
    Stopwatch clock;
    VerificationReport rep("labelling");
    const LabellingCheck c = check_labelling(g, lab);
    rep.expect("bijective", c.bijective, true, Provenance::Trivial);
    if (!c.bijective) {
        rep.elapsed = clock.seconds();
        return rep;
    }
    rep.record("max_stretch", c.max_stretch);
    rep.expect("stretch_within_bound", c.max_stretch <= bw_bound, true, Provenance::Paper);
    rep.expect("proper_colouring", c.proper, true, Provenance::Paper);
    rep.record("zero_count", c.zero_positions.size());
    rep.record("zero_positions", c.zero_positions);
    rep.record("c1", lab.c1);
    rep.record("c2", lab.c2);
    rep.record("max_steps", c.max_steps);
    rep.expect("zero_free", c.zero_free, true, Provenance::Paper);
    rep.elapsed = clock.seconds();
    return rep;
}

// Exact bandwidth by depth-first placement with deadline pruning.
inline int exact_bandwidth(const Graph& g)
{
    const int n = g.order();
    if (n > 16) throw CapacityError("exact_bandwidth: at most 16 vertices supported");
    if (n <= 1 || g.size() == 0) return 0;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    std::set<std::pair<std::uint32_t, std::vector<int>>> dead;

    auto feasible = [&](auto&& self, int k, std::uint32_t placed) -> bool {
        const int t = static_cast<int>(order.size());
        if (t == n) return true;
        // Deadlines imposed by placed vertices on their unplaced neighbours.
        std::vector<int> deadline(static_cast<std::size_t>(n), n - 1);
        for (int v : order)
            for (int w : g.neighbours(v))
                if (!(placed >> w & 1U)) deadline[static_cast<std::size_t>(w)] = std::min(deadline[static_cast<std::size_t>(w)], pos[static_cast<std::size_t>(v)] + k);
        std::vector<int> counts(static_cast<std::size_t>(n), 0);
        for (int w = 0; w < n; ++w) {
            if (placed >> w & 1U) continue;
            if (deadline[static_cast<std::size_t>(w)] < t) return false;
            ++counts[static_cast<std::size_t>(deadline[static_cast<std::size_t>(w)])];
        }
        int running = 0;
        for (int d = t; d < n; ++d) {
            running += counts[static_cast<std::size_t>(d)];
            if (running > d - t + 1) return false;
        }
        std::vector<int> recent(order.end() - std::min<std::ptrdiff_t>(k, t), order.end());
        auto key = std::make_pair(placed, recent);
        if (dead.count(key)) return false;
        for (int w = 0; w < n; ++w) {
            if (placed >> w & 1U) continue;
            pos[static_cast<std::size_t>(w)] = t;
            order.push_back(w);
            const bool ok = self(self, k, placed | (std::uint32_t{1} << w));
            order.pop_back();
            pos[static_cast<std::size_t>(w)] = -1;
            if (ok) return true;
        }
        dead.insert(std::move(key));
        return false;
    };
    for (int k = std::max(1, (max_degree(g) + 1) / 2); k < n; ++k) {
        dead.clear();
        if (feasible(feasible, k, 0)) return k;
    }
    return n - 1;
}

// ---------------------------------------------------------------------------
// Prisms over graphs.

inline Graph prism_over(const Graph& y)
{
    const int n = y.order();
    std::vector<Edge> es;
    for (auto [a, b] : y.edges()) {
        es.emplace_back(a, b);
        es.emplace_back(a + n, b + n);
    }
    for (int v = 0; v < n; ++v) es.emplace_back(v, v + n);
    return new_graph(2 * n, es);
}

// Searches for a split V = A + B with a matching a -> twin(a) such that the
// twins induce a copy of G[A] and no other edges cross. Necessary conditions
// (even order, even count of non-matching edges) are checked first.
inline bool is_prism_over_any(const Graph& g)
{
    const int n = g.order();
    if (n > 20) throw CapacityError("is_prism_over_any: at most 20 vertices supported");
    if (n == 0 || n % 2 != 0) return false;
    if ((g.size() - n / 2) % 2 != 0) return false;
    std::vector<int> twin(static_cast<std::size_t>(n), -1);
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> pairs;  // (a in A, b in B)

    auto consistent = [&](int a, int b) {
        for (auto [a2, b2] : pairs) {
            if (g.adjacent(a, a2) != g.adjacent(b, b2)) return false;
            if (g.adjacent(a, b2) || g.adjacent(b, a2)) return false;
        }
        return true;
    };
    auto search = [&](auto&& self) -> bool {
        int v = 0;
        while (v < n && side[static_cast<std::size_t>(v)] != -1) ++v;
        if (v == n) return true;
        for (int w : g.neighbours(v)) {
            if (side[static_cast<std::size_t>(w)] != -1) continue;
            for (int orient = 0; orient < 2; ++orient) {
                // The very first pair fixes which copy is called A.
                if (pairs.empty() && orient == 1) continue;
                const int a = orient == 0 ? v : w;
                const int b = orient == 0 ? w : v;
                if (!consistent(a, b)) continue;
                side[static_cast<std::size_t>(a)] = 0;
                side[static_cast<std::size_t>(b)] = 1;
                pairs.emplace_back(a, b);
                if (self(self)) return true;
                pairs.pop_back();
                side[static_cast<std::size_t>(a)] = -1;
                side[static_cast<std::size_t>(b)] = -1;
            }
        }
        return false;
    };
    return search(search);
}

// ---------------------------------------------------------------------------
// Vertex maps on the ladder families.

inline VertexMap swap_rails(int r, int extra)
{
    const Ladder L{r};
    VertexMap m(static_cast<std::size_t>(2 * r + extra));
    for (int i = 0; i < r; ++i) {
        m[static_cast<std::size_t>(L.x(i))] = L.y(i);
        m[static_cast<std::size_t>(L.y(i))] = L.x(i);
    }
    for (int k = 0; k < extra; ++k) m[static_cast<std::size_t>(2 * r + k)] = 2 * r + k;
    return m;
}

// Reflection u_i <-> u_{1-i} on both rails, applied index-wise.
inline VertexMap reflect_rails_literal(int r, int extra)
{
    const Ladder L{r};
    VertexMap m(static_cast<std::size_t>(2 * r + extra));
    for (int i = 0; i < r; ++i) {
        m[static_cast<std::size_t>(L.x(i))] = L.x(1 - i);
        m[static_cast<std::size_t>(L.y(i))] = L.y(1 - i);
    }
    for (int k = 0; k < extra; ++k) m[static_cast<std::size_t>(2 * r + k)] = 2 * r + k;
    if (extra == 2) std::swap(m[static_cast<std::size_t>(2 * r)], m[static_cast<std::size_t>(2 * r + 1)]);
    return m;
}

// Reflection exchanging columns 0 and 1. On a Moebius ladder the columns
// 2..r-1 change rails as well: x_i <-> y_{r+1-i}.
inline VertexMap reflect_rails(int r, int extra, bool mobius)
{
    if (!mobius) return reflect_rails_literal(r, extra);
    VertexMap m = reflect_rails_literal(r, extra);
    const Ladder L{r};
    for (int i = 2; i < r; ++i) {
        m[static_cast<std::size_t>(L.x(i))] = L.y(r + 1 - i);
        m[static_cast<std::size_t>(L.y(i))] = L.x(r + 1 - i);
    }
    return m;
}

} // namespace hamspan

#endif // HAMSPAN_STRUCTURE_HPP
