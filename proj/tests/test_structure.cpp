#include <random>

#include "catch_amalgamated.hpp"

#include "hamspan/families.hpp"
#include "hamspan/reference_data.hpp"
#include "hamspan/structure.hpp"
#include "oracles.hpp"

using namespace hamspan;

namespace {

Graph cycle(int n)
{
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return new_graph(n, es);
}

CBVariant variant_for(bool mobius, bool minus)
{
    if (minus) return mobius ? CBVariant::MBoxminus : CBVariant::PrBoxminus;
    return mobius ? CBVariant::MBoxtimes : CBVariant::PrBoxtimes;
}

const Value* computed(const VerificationReport& rep, const std::string& key)
{
    for (const auto& [k, v] : rep.computed)
        if (k == key) return &v;
    return nullptr;
}

} // namespace

TEST_CASE("CB families consist of Hamilton circuits of the right sizes")
{
    for (int r = 4; r <= 11; ++r) {
        const bool mobius = r % 2 == 1;
        for (bool minus : {false, true}) {
            const CBFamily f = build_cb(variant_for(mobius, minus), r);
            CHECK(f.cb1.size() == 5);
            CHECK(static_cast<int>(f.cb2.size()) == r - 1);
            for (const auto* list : {&f.cb1, &f.cb2})
                for (const auto& c : *list) {
                    CHECK(static_cast<int>(c.length()) == f.host.graph.order());
                    CHECK_NOTHROW(Circuit::make(f.host.graph, c.vertices()));
                }
        }
    }
    CHECK_THROWS_AS(build_cb(CBVariant::PrBoxtimes, 5), PreconditionError);
    CHECK_THROWS_AS(build_cb(CBVariant::MBoxminus, 6), PreconditionError);
    CHECK_THROWS_AS(build_cb(CBVariant::MBoxtimes, 3), PreconditionError);
}

TEST_CASE("the pattern-breaking two-apex member")
{
    const CBFamily f = build_cb(CBVariant::PrBoxminus, 4);
    const auto& names = f.host.layout;
    std::vector<int> seq;
    for (const char* s : {"z'", "z''", "x0", "x1", "x2", "x3", "y3", "y2", "y1", "y0"}) seq.push_back(names.index_of(s));
    const Circuit want = Circuit::make(f.host.graph, seq);
    CHECK(std::find(f.cb2.begin(), f.cb2.end(), want) != f.cb2.end());
}

TEST_CASE("CB independence and minors")
{
    for (int r = 4; r <= 10; ++r) {
        const bool mobius = r % 2 == 1;
        for (bool minus : {false, true}) {
            const CBVariant v = variant_for(mobius, minus);
            const CBFamily f = build_cb(v, r);
            const auto rep = verify_cb_independence(f, reference::cb_expectation(v));
            INFO(cb_variant_name(v) << " r=" << r);
            CHECK(rep.status != Status::Fail);
            // Only the Moebius sums fail to be direct; that is reported, not failed.
            CHECK((rep.status == Status::Finding) == mobius);
            const auto all = chains_of(f.host.graph, f.cb1);
            auto both = all;
            for (const auto& c : chains_of(f.host.graph, f.cb2)) both.push_back(c);
            CHECK(rank(all) == 5);
            CHECK(static_cast<int>(rank(both)) == r + (mobius ? 3 : 4));
            if (!mobius) CHECK(static_cast<int>(rank(both)) == betti1(f.host.graph) - (minus ? 1 : 0));
        }
    }
}

TEST_CASE("a wrong expected minor is reported as a failure")
{
    const CBFamily f = build_cb(CBVariant::PrBoxtimes, 6);
    auto expect = reference::cb_expectation(CBVariant::PrBoxtimes);
    expect.minor.rows[0].flip(0);
    CHECK(verify_cb_independence(f, expect).status == Status::Fail);
    CHECK(verify_cb_independence(f, std::nullopt).status == Status::Pass);
}

TEST_CASE("non-separating induced circuits")
{
    const Graph k4 = new_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(nonseparating_induced_circuits(k4).size() == 4);
    CHECK(nonseparating_induced_circuits(prism(4).graph).size() == 6);
    for (int r : {4, 6, 8}) {
        CircuitSet got = nonseparating_induced_circuits(prism(r).graph);
        CHECK(static_cast<int>(got.size()) == r + 2);
        CHECK(got == prism_nsi_list(r));
        for (int c : edge_counts(prism(r).graph, got)) CHECK(c <= 2);
    }
    CHECK(is_nonseparating(cycle(5), Circuit::make(cycle(5), {0, 1, 2, 3, 4})));
}

TEST_CASE("chordless circuits agree with brute force")
{
    std::mt19937_64 rng(501);
    for (int t = 0; t < 30; ++t) {
        const Graph g = oracle::random_graph(rng, 7, 0.45);
        std::size_t expected = 0;
        for (int len = 3; len <= 7; ++len)
            for (const auto& es : oracle::circuits_of_length(g, len)) {
                std::set<int> vs;
                for (auto [a, b] : es) {
                    vs.insert(a);
                    vs.insert(b);
                }
                int inside = 0;
                for (auto [a, b] : g.edges()) inside += vs.count(a) && vs.count(b);
                expected += inside == len;
            }
        CHECK(chordless_circuits(g).size() == expected);
    }
}

TEST_CASE("Tutte generation")
{
    const Graph k4 = new_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (const Graph& g : {k4, prism(4).graph, prism(6).graph, mobius_ladder(5).graph, x_graph().graph}) {
        const auto rep = verify_tutte_generation(g);
        CHECK(rep.status == Status::Pass);
    }
    CHECK(std::get<std::int64_t>(*computed(verify_tutte_generation(prism(4).graph), "nsi.rank")) == 5);
    CHECK_THROWS_AS(verify_tutte_generation(cycle(5)), InapplicableError);
}

TEST_CASE("symmetric-difference identities on even prisms")
{
    for (int r : {4, 6, 8, 10}) CHECK(verify_symdiff_identities(r).status == Status::Pass);
    CHECK_THROWS_AS(verify_symdiff_identities(5), PreconditionError);
    const PrismSums p = prism_sums(8);
    CHECK(p.squares.size() == 8);
    for (const auto& h : p.shifted) CHECK(static_cast<int>(h.length()) == 16);
}

TEST_CASE("bandwidth labellings")
{
    const auto bt4 = check_labelling(boxtimes(4, false).graph, boxtimes_labelling(4));
    CHECK(bt4.bijective);
    CHECK(bt4.max_stretch <= 4);
    CHECK(bt4.proper);
    const auto mt5 = check_labelling(boxtimes(5, true).graph, boxtimes_labelling(5));
    CHECK(mt5.bijective);
    CHECK(mt5.max_stretch <= 5);

    const auto bm4 = check_labelling(boxminus(4, false).graph, boxminus_labelling(4));
    CHECK(bm4.bijective);
    CHECK(bm4.zero_positions == std::vector<int>{2, 5});
    // The displayed colouring of the two-apex host gives z' and y0 the same colour.
    CHECK_FALSE(bm4.proper);
    CHECK_FALSE(bm4.monochromatic.empty());

    Labelling broken = boxtimes_labelling(4);
    broken.b[0] = broken.b[1];
    CHECK_FALSE(check_labelling(boxtimes(4, false).graph, broken).bijective);
    CHECK_THROWS_AS(check_labelling(prism(4).graph, boxtimes_labelling(4)), PreconditionError);
}

TEST_CASE("zero-freeness follows the window definition")
{
    // Path on 6 vertices, colour 0 at positions 3 and 4.
    const Graph p6 = new_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    Labelling lab;
    lab.b = {1, 2, 3, 4, 5, 6};
    lab.h = {1, 2, 0, 0, 1, 2};
    lab.c1 = 4;
    lab.c2 = 1;
    auto ok = check_labelling(p6, lab);
    CHECK(ok.zero_free);
    CHECK(ok.max_steps == 3);
    lab.c1 = 1;
    CHECK_FALSE(check_labelling(p6, lab).zero_free);
}

TEST_CASE("exact bandwidth")
{
    CHECK(exact_bandwidth(new_graph(4, {{0, 1}, {1, 2}, {2, 3}})) == 1);
    CHECK(exact_bandwidth(cycle(6)) == 2);
    CHECK(exact_bandwidth(prism(4).graph) <= 4);
    CHECK(exact_bandwidth(new_graph(0, {})) == 0);
    CHECK_THROWS_AS(exact_bandwidth(prism(9).graph), CapacityError);

    std::mt19937_64 rng(502);
    for (int t = 0; t < 25; ++t) {
        const Graph g = oracle::random_graph(rng, 7, 0.4);
        CHECK(exact_bandwidth(g) == oracle::bandwidth(g));
    }
}

TEST_CASE("prism detection")
{
    CHECK(find_isomorphism(prism_over(cycle(4)), prism(4).graph).has_value());
    CHECK_FALSE(is_prism_over_any(cn_squared(7).graph));
    CHECK_FALSE(is_prism_over_any(cn_squared(8).graph));
    CHECK(is_prism_over_any(prism(5).graph));
    CHECK(is_prism_over_any(prism_over(x_graph().graph)));
    CHECK_FALSE(is_prism_over_any(cycle(5)));

    std::mt19937_64 rng(503);
    for (int t = 0; t < 20; ++t) {
        const Graph y = oracle::random_graph(rng, 5, 0.5);
        std::vector<int> p(10);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        const Graph py = prism_over(y);
        std::vector<Edge> es;
        for (auto [a, b] : py.edges()) es.push_back(make_edge(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]));
        CHECK(is_prism_over_any(new_graph(10, es)));
    }
}

TEST_CASE("ladder automorphisms")
{
    for (int r = 4; r <= 9; ++r) {
        const bool mobius = r % 2 == 1;
        const Graph bt = boxtimes(r, mobius).graph;
        CHECK(verify_automorphism(bt, swap_rails(r, 1)));
        CHECK(verify_automorphism(bt, reflect_rails(r, 1, mobius)));
        // The index-wise reflection only works on the prism.
        CHECK(verify_automorphism(bt, reflect_rails_literal(r, 1)) == !mobius);
    }
}
