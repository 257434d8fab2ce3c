#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "oracle.hpp"
#include "tutte/matroid.hpp"
#include "tutte/rng.hpp"
#include "tutte/verify.hpp"

using namespace tutte;

namespace {

BinaryMatroid k3_cycle_matroid() {
    Graph g;
    g.n = 3;
    g.edges = {{0, 1}, {1, 2}, {0, 2}};
    return from_graph(g);
}

BinaryMatroid u12() {
    Gf2Matrix m(1, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    return BinaryMatroid(m);
}

bool same_rank_function(const BinaryMatroid& a, const BinaryMatroid& b) {
    if (a.size() != b.size()) return false;
    const std::uint64_t total = std::uint64_t(1) << a.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (a.rank_of_column_mask(mask) != b.rank_of_column_mask(mask)) return false;
    return true;
}

}  // namespace

TEST_CASE("rank_of worked examples") {
    BinaryMatroid loop(Gf2Matrix(1, 1));  // single zero column
    std::vector<ElementId> l{0};
    CHECK(loop.rank_of(l) == 0);

    BinaryMatroid k3 = k3_cycle_matroid();
    std::vector<ElementId> all{0, 1, 2};
    CHECK(k3.rank_of(all) == 2);
    CHECK(k3.rank_of(std::vector<ElementId>{}) == 0);
    CHECK_THROWS_AS(k3.rank_of(std::vector<ElementId>{9}), InputError);
}

TEST_CASE("deletion") {
    // two parallel columns
    Gf2Matrix m(1, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    BinaryMatroid pm(m);
    BinaryMatroid del = delete_element(pm, 0);
    CHECK(del.size() == 1);
    CHECK(del.rank() == 1);
    CHECK(del.ground() == std::vector<ElementId>{1});  // identity of the survivor

    BinaryMatroid single(Gf2Matrix(1, 1));
    CHECK(delete_element(single, 0).size() == 0);
}

TEST_CASE("contraction worked examples") {
    BinaryMatroid id2(Gf2Matrix::identity(2));
    BinaryMatroid c = contract_element(id2, 0);
    CHECK(c.size() == 1);
    CHECK(c.rank() == 1);
    CHECK(c.is_coloop(1));

    // contracting a loop is deletion
    Gf2Matrix with_loop(2, 2);
    with_loop.set(0, 1, true);
    BinaryMatroid wl(with_loop);
    CHECK(same_rank_function(contract_element(wl, 0), delete_element(wl, 0)));

    // contracting one element of a two-element parallel class leaves a loop
    BinaryMatroid p = u12();
    BinaryMatroid contracted = contract_element(p, 0);
    CHECK(contracted.size() == 1);
    CHECK(contracted.is_loop(1));
}

TEST_CASE("duality worked examples") {
    BinaryMatroid id2(Gf2Matrix::identity(2));
    BinaryMatroid d = dual(id2);
    CHECK(d.is_loop(0));
    CHECK(d.is_loop(1));
    CHECK(d.ground() == id2.ground());

    CHECK(same_rank_function(dual(dual(id2)), id2));
    CHECK(same_rank_function(dual(u12()), u12()));
}

TEST_CASE("loops and coloops") {
    Gf2Matrix m(2, 3);
    m.set(0, 0, true);  // column 0: e1
    m.set(1, 1, true);  // column 1: e2, column 2: zero
    BinaryMatroid b(m);
    CHECK(b.is_loop(2));
    CHECK_FALSE(b.is_loop(0));
    CHECK(b.is_coloop(0));
    CHECK(b.is_coloop(1));

    BinaryMatroid p = u12();
    CHECK_FALSE(p.is_loop(0));
    CHECK_FALSE(p.is_coloop(0));
    CHECK_FALSE(p.is_loop(1));
    CHECK_FALSE(p.is_coloop(1));
}

TEST_CASE("graphs to matroids") {
    BinaryMatroid k3 = k3_cycle_matroid();
    CHECK(k3.rank() == 2);

    Graph self_loop;
    self_loop.n = 1;
    self_loop.edges = {{0, 0}};
    CHECK(from_graph(self_loop).is_loop(0));

    Graph parallel;
    parallel.n = 2;
    parallel.edges = {{0, 1}, {0, 1}};
    BinaryMatroid pm = from_graph(parallel);
    CHECK(pm.rank() == 1);
    CHECK(pm.representation().get(0, 0) == pm.representation().get(0, 1));
}

TEST_CASE("graph rank equals n minus component count") {
    SplitMix64 rng(23);
    for (int inst = 0; inst < 25; ++inst) {
        Graph g = verify::random_graph(rng, 6, 8);
        BinaryMatroid m = from_graph(g);
        const std::uint64_t total = std::uint64_t(1) << g.edges.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const std::size_t kappa = oracle::naive_kappa(g, mask);
            CHECK(m.rank_of_column_mask(mask) == g.n - kappa);
            CHECK(component_count(g, mask) == kappa);
        }
    }
}

TEST_CASE("minors commute and duality swaps them") {
    SplitMix64 rng(29);
    for (int inst = 0; inst < 20; ++inst) {
        BinaryMatroid m = verify::random_matroid(rng, 4, 6);
        if (m.size() < 2) continue;
        const ElementId e = m.element_at(0);
        const ElementId f = m.element_at(1 + rng.below(m.size() - 1));

        CHECK(same_rank_function(contract_element(delete_element(m, e), f),
                                 delete_element(contract_element(m, f), e)));
        CHECK(same_rank_function(dual(delete_element(m, e)), contract_element(dual(m), e)));
    }
}

TEST_CASE("contraction matches the minor rank formula") {
    SplitMix64 rng(31);
    for (int inst = 0; inst < 20; ++inst) {
        BinaryMatroid m = verify::random_matroid(rng, 4, 6);
        const std::size_t cols = m.size();
        const std::size_t pick = rng.below(cols);
        const ElementId e = m.element_at(pick);
        BinaryMatroid c = contract_element(m, e);
        const std::vector<ElementId> single{e};
        const std::size_t re = m.rank_of(single);
        // enumerate subsets of the remaining elements
        std::vector<ElementId> rest;
        for (ElementId g : m.ground())
            if (g != e) rest.push_back(g);
        const std::uint64_t total = std::uint64_t(1) << rest.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<ElementId> subset;
            for (std::size_t j = 0; j < rest.size(); ++j)
                if (mask >> j & 1) subset.push_back(rest[j]);
            std::vector<ElementId> with = subset;
            with.push_back(e);
            CHECK(c.rank_of(subset) == m.rank_of(with) - re);
        }
    }
}

TEST_CASE("element identity is stable across operations") {
    BinaryMatroid k3 = k3_cycle_matroid();
    BinaryMatroid step = delete_element(contract_element(dual(k3), 1), 0);
    CHECK(step.ground() == std::vector<ElementId>{2});
}
