#ifndef HAMSPAN_GENERATEDNESS_HPP
#define HAMSPAN_GENERATEDNESS_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hamspan/cycle_space.hpp"
#include "hamspan/errors.hpp"
#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/hamilton.hpp"
#include "hamspan/report.hpp"

namespace hamspan {

struct SpanReport {
    int ambient_dim = 0;
    int span_dim = 0;
    int codimension = 0;
    // Indices (into the generator list) of the greedy independent subset.
    std::vector<std::size_t> basis_witness;
    std::size_t generator_count = 0;
};

inline SpanReport span_of(const Graph& g, const std::vector<EdgeVector>& generators)
{
    SpanReport s;
    s.ambient_dim = betti1(g);
    s.generator_count = generators.size();
    s.basis_witness = generators.empty() ? std::vector<std::size_t>{} : independent_prefix_basis(generators);
    s.span_dim = static_cast<int>(s.basis_witness.size());
    s.codimension = s.ambient_dim - s.span_dim;
    return s;
}

// Codimension of the span of C_L(g) inside the cycle space.
inline SpanReport span_report(const Graph& g, const LengthSet& L, const SearchOptions& opt = {})
{
    auto found = circuits_with_lengths(g, L, opt);
    if (found.partial) throw CapacityError("span_report: circuit enumeration cap exceeded");
    return span_of(g, chains_of(g, found.circuits));
}

// Hamilton span dimension found by streaming circuits into an eliminator; stops
// once the span reaches its parity bound or after `cap` circuits. Short searches
// on relabelled copies of g come first (they vary the edges near the search root),
// then a plain exhaustive pass. Everything is seeded, so the result and
// circuits_seen are reproducible.
struct HamiltonSpanProbe {
    int ambient_dim = 0;
    // Hamilton circuits of even length only span even-size cycles, so for even
    // f0 on a non-bipartite graph the span cannot exceed ambient_dim - 1.
    int upper_bound = 0;
    int span_dim = 0;
    std::size_t circuits_seen = 0;
    // True when the exhaustive pass visited every Hamilton circuit.
    bool exhausted = false;
    // The span dimension is final: at its bound or exhausted.
    bool exact() const { return exhausted || span_dim == upper_bound; }
    int codimension() const { return ambient_dim - span_dim; }
};

inline HamiltonSpanProbe hamilton_span_probe(const Graph& g, std::size_t cap, int rounds = 32,
                                             std::size_t round_budget = 4096)
{
    HamiltonSpanProbe p;
    p.ambient_dim = betti1(g);
    p.upper_bound = p.ambient_dim - (g.order() % 2 == 0 && !bipartition(g) ? 1 : 0);
    if (p.upper_bound == 0) {
        p.exhausted = true;
        return p;
    }
    Eliminator elim(static_cast<std::size_t>(g.size()), static_cast<std::size_t>(p.ambient_dim) + 1);
    auto take = [&](const std::vector<int>& seq) {
        ++p.circuits_seen;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < seq.size(); ++i) es.push_back(make_edge(seq[i], seq[(i + 1) % seq.size()]));
        if (elim.insert(edges_to_chain(g, es), elim.rank())) ++p.span_dim;
        return p.span_dim < p.upper_bound && p.circuits_seen < cap;
    };

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    for (int round = 0; round < rounds; ++round) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabelled;
        for (auto [u, v] : g.edges())
            relabelled.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        const Graph h = new_graph(g.order(), relabelled);
        std::vector<int> back(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) back[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
        std::size_t used = 0;
        bool go_on = true;
        for_each_hamilton_circuit(h, [&](const std::vector<int>& seq) {
            std::vector<int> orig;
            for (int v : seq) orig.push_back(back[static_cast<std::size_t>(v)]);
            go_on = take(orig);
            return go_on && ++used < round_budget;
        });
        if (!go_on) return p;
        if (used < round_budget) {
            // This round saw every Hamilton circuit.
            p.exhausted = true;
            return p;
        }
    }
    p.exhausted = for_each_hamilton_circuit(g, take);
    return p;
}

struct Membership {
    bool member = false;
    SpanReport span;
    PairCheck paths;
};

namespace detail {

inline void check_xi(const Graph& g, int xi)
{
    if (xi < 0 || xi > betti1(g))
        throw PreconditionError("xi must lie in [0, beta_1] = [0, " + std::to_string(betti1(g)) + "]");
}

} // namespace detail

// M_{L,xi}: codimension exactly xi and (L-1)-path-connected.
inline Membership membership_M(const Graph& g, const LengthSet& L, int xi, const SearchOptions& opt = {})
{
    detail::check_xi(g, xi);
    Membership m;
    m.span = span_report(g, L, opt);
    m.paths = is_path_connected(g, L.shifted(-1).path_lengths(g), opt.threads);
    m.member = m.span.codimension == xi && m.paths.holds;
    return m;
}

// bM_{L,xi}: bipartite, codimension exactly xi and (L-1)-laceable.
inline Membership membership_bM(const Graph& g, const LengthSet& L, int xi, const SearchOptions& opt = {})
{
    if (!bipartition(g)) throw InapplicableError("in_bM: graph is not bipartite");
    detail::check_xi(g, xi);
    Membership m;
    m.span = span_report(g, L, opt);
    m.paths = is_laceable(g, L.shifted(-1).path_lengths(g), opt.threads);
    m.member = m.span.codimension == xi && m.paths.holds;
    return m;
}

inline bool in_M(const Graph& g, const LengthSet& L, int xi, const SearchOptions& opt = {})
{
    return membership_M(g, L, xi, opt).member;
}

inline bool in_bM(const Graph& g, const LengthSet& L, int xi, const SearchOptions& opt = {})
{
    return membership_bM(g, L, xi, opt).member;
}

// Re-expresses a chain of g in the edge indexing of a supergraph h on the same vertices.
inline EdgeVector reindex_chain(const Graph& g, const EdgeVector& v, const Graph& h)
{
    EdgeVector out(static_cast<std::size_t>(h.size()));
    for (auto i : v.support()) {
        auto [a, b] = g.edges()[i];
        const int j = h.edge_index(a, b);
        if (j < 0) throw EdgeMissingError("reindex_chain: edge missing from target graph");
        out.set(static_cast<std::size_t>(j));
    }
    return out;
}

// Checks one step of the monotone lifting argument for g + e: a path with length
// in L-1 closes e into a circuit C, both direct-sum decompositions
//   <C_L(g+e)> = <C_L(g)> (+) <c_C>   and   Z1(g+e) = Z1(g) (+) <c_C>
// hold (verified through direct_sum_split), and g + e stays in the class.
inline VerificationReport lift_edge(const Graph& g, const LengthSet& L, int xi, Edge e, bool bipartite_variant,
                                    const SearchOptions& opt = {})
{
    Stopwatch clock;
    VerificationReport rep("lift_edge");
    if (g.adjacent(e.first, e.second)) throw EdgeExistsError("lift_edge: edge already present");
    const Graph h = add_edge(g, e);
    if (bipartite_variant && (!bipartition(g) || !bipartition(h)))
        throw PreconditionError("lift_edge: the new edge must keep the graph bipartite");
    const Membership before = bipartite_variant ? membership_bM(g, L, xi, opt) : membership_M(g, L, xi, opt);
    if (!before.member) throw PreconditionError("lift_edge: graph is not a member of the class");

    auto path = path_with_lengths(g, e.first, e.second, L.shifted(-1).path_lengths(g));
    if (!path) {
        rep.fail("no path with length in L-1 joins the endpoints of the new edge");
        rep.elapsed = clock.seconds();
        return rep;
    }
    const Circuit closing = Circuit::make(h, *path);
    rep.record("closing_circuit", closing.to_string());
    const EdgeVector u0 = circuit_to_chain(h, closing);
    const std::size_t b0 = static_cast<std::size_t>(h.edge_index(e.first, e.second));

    auto after_circuits = circuits_with_lengths(h, L, opt);
    auto before_circuits = circuits_with_lengths(g, L, opt);
    if (after_circuits.partial || before_circuits.partial) throw CapacityError("lift_edge: circuit cap exceeded");
    const auto after_chains = chains_of(h, after_circuits.circuits);
    std::vector<EdgeVector> before_chains;
    for (const auto& c : chains_of(g, before_circuits.circuits)) before_chains.push_back(reindex_chain(g, c, h));

    // (ds1) on the generated subspaces.
    auto split1 = direct_sum_split(after_chains, b0, u0);
    const std::size_t dim_after = rank(after_chains);
    const std::size_t dim_before = before_chains.empty() ? 0 : rank(before_chains);
    const std::size_t dim_w1 = split1.w_gens.empty() ? 0 : rank(split1.w_gens);
    std::vector<EdgeVector> joint = split1.w_gens;
    joint.insert(joint.end(), before_chains.begin(), before_chains.end());
    const std::size_t dim_joint = joint.empty() ? 0 : rank(joint);
    rep.expect("ds1.dim_after", dim_after, dim_before + 1, Provenance::Derived);
    rep.expect("ds1.dim_complement", dim_w1, dim_before, Provenance::Derived);
    rep.expect("ds1.complement_equals_old_span", dim_joint == dim_before && dim_w1 == dim_before, true,
               Provenance::Derived);

    // (ds2) on the cycle spaces.
    auto split2 = direct_sum_split(cycle_space_basis(h), b0, u0);
    bool inside_old = true;
    for (const auto& w : split2.w_gens) inside_old = inside_old && !w.test(b0) && is_cycle(h, w);
    const std::size_t dim_w2 = split2.w_gens.empty() ? 0 : rank(split2.w_gens);
    rep.expect("ds2.betti_after", betti1(h), betti1(g) + 1, Provenance::Derived);
    rep.expect("ds2.dim_complement", dim_w2, static_cast<std::size_t>(betti1(g)), Provenance::Derived);
    rep.expect("ds2.complement_in_old_cycle_space", inside_old, true, Provenance::Derived);

    const Membership after = bipartite_variant ? membership_bM(h, L, xi, opt) : membership_M(h, L, xi, opt);
    rep.expect("member_after", after.member, true, Provenance::Paper);
    rep.elapsed = clock.seconds();
    return rep;
}

// Circuits of C_L(g) whose chains sum to the target's chain, or nullopt when
// the target lies outside their span.
inline std::optional<CircuitSet> realize(const Graph& g, const Circuit& target, const LengthSet& L,
                                         const SearchOptions& opt = {})
{
    auto found = circuits_with_lengths(g, L, opt);
    if (found.partial) throw CapacityError("realize: circuit enumeration cap exceeded");
    const auto chains = chains_of(g, found.circuits);
    const EdgeVector want = circuit_to_chain(g, target);
    auto coeff = in_span(want, chains);
    if (!coeff) return std::nullopt;
    CircuitSet out;
    EdgeVector sum(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (coeff->test(i)) {
            out.push_back(found.circuits[i]);
            sum ^= chains[i];
        }
    }
    if (sum != want) throw Error("realize: internal error, recombination does not match the target");
    return out;
}

} // namespace hamspan

#endif // HAMSPAN_GENERATEDNESS_HPP
