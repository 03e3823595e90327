#include <random>

#include "catch_amalgamated.hpp"

#include "hamspan/cycle_space.hpp"
#include "hamspan/families.hpp"
#include "oracles.hpp"

using namespace hamspan;

namespace {

// Edge sets of every circuit in g, as chains.
std::vector<EdgeVector> all_circuit_chains(const Graph& g)
{
    std::vector<EdgeVector> out;
    for (int len = 3; len <= g.order(); ++len)
        for (const auto& es : oracle::circuits_of_length(g, len))
            out.push_back(edges_to_chain(g, std::vector<Edge>(es.begin(), es.end())));
    return out;
}

} // namespace

TEST_CASE("canonical circuit form")
{
    const Graph k4 = new_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(Circuit::make(k4, {2, 3, 0, 1}).vertices() == std::vector<int>{0, 1, 2, 3});
    CHECK(Circuit::make(k4, {3, 2, 1, 0}).vertices() == std::vector<int>{0, 1, 2, 3});
    CHECK(Circuit::make(k4, {1, 0, 3}).vertices() == std::vector<int>{0, 1, 3});
    CHECK(Circuit::make(k4, {1, 0, 3}).to_string() == "0,1,3");
    CHECK(Circuit::make(k4, {0, 2, 1, 3}) == Circuit::make(k4, {3, 1, 2, 0}));

    CHECK_THROWS_AS(Circuit::make(k4, {0, 1}), CircuitError);
    CHECK_THROWS_AS(Circuit::make(k4, {0, 1, 0, 2}), CircuitError);
    CHECK_THROWS_AS(Circuit::make(k4, {0, 1, 9}), CircuitError);
    const Graph c4 = new_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_THROWS_AS(Circuit::make(c4, {0, 1, 3, 2}), CircuitError);
}

TEST_CASE("canonical form is independent of rotation and direction")
{
    std::mt19937_64 rng(201);
    const Graph g = cn_squared(9).graph;
    const auto circuits = oracle::circuits_of_length(g, 6);
    REQUIRE_FALSE(circuits.empty());
    const Circuit c = Circuit::make(g, {0, 1, 3, 5, 4, 2});
    auto seq = c.vertices();
    for (int t = 0; t < 20; ++t) {
        std::rotate(seq.begin(), seq.begin() + static_cast<long>(rng() % seq.size()), seq.end());
        if (rng() % 2) std::reverse(seq.begin(), seq.end());
        CHECK(Circuit::make(g, seq) == c);
    }
}

TEST_CASE("parse_circuit")
{
    const Graph x = x_graph().graph;
    CHECK(parse_circuit(x, "2,3,4").vertices() == std::vector<int>{2, 3, 4});
    CHECK_THROWS_AS(parse_circuit(x, "2,a,4"), ParseError);
    CHECK_THROWS_AS(parse_circuit(x, "0,1"), CircuitError);
    CHECK(parse_vertex_list("5,4,3") == std::vector<int>{5, 4, 3});
}

TEST_CASE("circuit chains")
{
    const Graph c4 = new_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto chain = circuit_to_chain(c4, Circuit::make(c4, {0, 1, 2, 3}));
    CHECK(chain.to_string() == "1111");
    CHECK(is_cycle(c4, chain));
    CHECK_FALSE(is_cycle(c4, BitVector::from_string("1100")));
    CHECK_THROWS_AS(is_cycle(c4, BitVector(3)), WidthMismatchError);
    CHECK_THROWS_AS(edges_to_chain(c4, {{0, 2}}), EdgeMissingError);
}

TEST_CASE("betti1 on small examples")
{
    CHECK(betti1(new_graph(0, {})) == 0);
    CHECK(betti1(new_graph(4, {{0, 1}, {2, 3}})) == 0);
    CHECK(betti1(ce_i1().graph) == 6);
    CHECK(betti1(ce_i3().graph) == 8);
    CHECK(betti1(x_graph().graph) == 8);
    CHECK(betti1(prism(5).graph) == 6);
    CHECK(betti1(cn_squared(7).graph) == 8);
}

TEST_CASE("cycle-space basis has rank betti1 and consists of cycles")
{
    std::mt19937_64 rng(202);
    for (int t = 0; t < 60; ++t) {
        const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.45);
        const auto basis = cycle_space_basis(g);
        CHECK(static_cast<int>(basis.size()) == oracle::betti1(g));
        CHECK(static_cast<int>(rank(basis)) == betti1(g));
        for (const auto& b : basis) CHECK(is_cycle(g, b));
    }
}

TEST_CASE("circuits span the whole cycle space")
{
    std::mt19937_64 rng(203);
    for (int t = 0; t < 25; ++t) {
        const Graph g = oracle::random_graph(rng, 6, 0.55);
        CHECK(static_cast<int>(rank(all_circuit_chains(g))) == betti1(g));
    }
}

TEST_CASE("decompose_support peels a cycle into edge-disjoint circuits")
{
    std::mt19937_64 rng(204);
    for (int t = 0; t < 60; ++t) {
        const Graph g = oracle::random_graph(rng, 8, 0.5);
        const auto basis = cycle_space_basis(g);
        if (basis.empty()) continue;
        BitVector coeff(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (rng() % 2) coeff.set(i);
        const EdgeVector v = combine(basis, coeff, static_cast<std::size_t>(g.size()));
        const CircuitSet parts = decompose_support(g, v);
        EdgeVector sum(static_cast<std::size_t>(g.size()));
        std::size_t total = 0;
        for (const auto& c : parts) {
            CHECK_NOTHROW(Circuit::make(g, c.vertices()));
            sum ^= circuit_to_chain(g, c);
            total += c.length();
        }
        CHECK(sum == v);
        CHECK(total == v.count());
    }
    const Graph path = new_graph(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(decompose_support(path, BitVector::from_string("10")), PreconditionError);
}

TEST_CASE("sums of even circuits stay even in a bipartite graph")
{
    std::mt19937_64 rng(205);
    for (int t = 0; t < 20; ++t) {
        const Graph g = oracle::random_bipartite(rng, 4, 4, 0.6);
        const auto chains = all_circuit_chains(g);
        for (std::size_t i = 0; i + 1 < chains.size(); i += 2) CHECK((chains[i] ^ chains[i + 1]).count() % 2 == 0);
    }
}

TEST_CASE("betti1 of the apex families")
{
    for (int r = 4; r <= 9; ++r) {
        CHECK(betti1(boxtimes(r, r % 2 == 1).graph) == r + 4);
        CHECK(betti1(boxminus(r, r % 2 == 1).graph) == r + 5);
    }
}

TEST_CASE("decompose_support on simple supports")
{
    const Graph two = new_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const EdgeVector both = BitVector::from_string("111111");
    const CircuitSet parts = decompose_support(two, both);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].vertices() == std::vector<int>{0, 1, 2});
    CHECK(parts[1].vertices() == std::vector<int>{3, 4, 5});

    const Graph x = x_graph().graph;
    const Circuit c = Circuit::make(x, {0, 1, 2});
    CHECK(decompose_support(x, circuit_to_chain(x, c)) == CircuitSet{c});
    CHECK(decompose_support(x, BitVector(static_cast<std::size_t>(x.size()))).empty());
}
