#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "oracle.hpp"
#include "tutte/codes.hpp"
#include "tutte/groups.hpp"
#include "tutte/rng.hpp"
#include "tutte/verify.hpp"

using namespace tutte;

namespace {

GeneratingMatrix u12_code() {
    Gf2Matrix m(1, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    return GeneratingMatrix(m);
}

PermutationGroup s3() {
    PermutationGroup g;
    g.points = 3;
    g.generators.push_back(Permutation({1, 0, 2}));
    g.generators.push_back(Permutation({1, 2, 0}));
    return g;
}

}  // namespace

TEST_CASE("weight distribution and enumerator") {
    GeneratingMatrix c = u12_code();
    CHECK(weight_distribution(c) == std::vector<std::uint64_t>{1, 0, 1});
    const Rational lambda(3, 7);
    CHECK(weight_enumerator(c, lambda) == 1 + lambda * lambda);

    GeneratingMatrix id2(Gf2Matrix::identity(2));
    CHECK(weight_distribution(id2) == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(weight_enumerator(id2, lambda) == (1 + lambda) * (1 + lambda));
    CHECK(weight_enumerator(id2, Rational(1)) == 4);  // |code| = 2^r

    GeneratingMatrix empty(Gf2Matrix(0, 3));
    CHECK(weight_distribution(empty) == std::vector<std::uint64_t>{1, 0, 0, 0});

    Gf2Matrix dependent(2, 2);
    dependent.set(0, 0, true);
    dependent.set(1, 0, true);
    CHECK_THROWS_AS(GeneratingMatrix(dependent), InputError);
}

TEST_CASE("weight enumerator agrees with the naive oracle") {
    SplitMix64 rng(67);
    for (int inst = 0; inst < 20; ++inst) {
        GeneratingMatrix c = verify::random_code(rng, 4, 6);
        const Rational lambda = verify::random_rational(rng, false);
        CHECK(weight_enumerator(c, lambda) == oracle::naive_weight_enumerator(c.matrix(), lambda));
    }
}

TEST_CASE("weight enumerator to Tutte value worked examples") {
    auto check = greene_check(u12_code(), Rational(1, 2));
    CHECK(check.lhs == Rational(5, 4));
    CHECK(check.rhs == Rational(5, 4));
    CHECK(check.equal);

    auto id_check = greene_check(GeneratingMatrix(Gf2Matrix::identity(2)), Rational(1, 3));
    CHECK(id_check.lhs == Rational(16, 9));
    CHECK(id_check.equal);

    auto at_one = greene_check(u12_code(), Rational(1));
    CHECK(at_one.lhs == 2);
    CHECK(at_one.equal);

    CHECK_THROWS_AS(greene_check(u12_code(), Rational(0)), ParameterError);
}

TEST_CASE("identity sweep over every row space up to length 7, dimension 5") {
    SplitMix64 rng(71);
    std::vector<Rational> lambdas;
    for (int i = 0; i < 20; ++i) lambdas.push_back(verify::random_rational(rng, true));
    auto sweep = verify::greene_class_sweep(5, 7, lambdas);
    INFO(sweep.first_failure);
    CHECK(sweep.failures == 0);
    // distinct row spaces of GF(2)^7 with dimension 1..5, plus all shorter lengths
    CHECK(sweep.classes > 29000);
}

TEST_CASE("cycle counting") {
    CHECK(cycle_count(Permutation::identity(5)) == 5);
    CHECK(cycle_count(Permutation({1, 0, 3, 2})) == 2);
    CHECK(cycle_count(Permutation({1, 2, 0})) == 1);
}

TEST_CASE("group enumeration") {
    CHECK(enumerate_group(s3()).size() == 6);

    PermutationGroup invs;
    invs.points = 4;
    invs.generators.push_back(Permutation({1, 0, 2, 3}));
    invs.generators.push_back(Permutation({0, 1, 3, 2}));
    CHECK(enumerate_group(invs).size() == 4);

    PermutationGroup trivial;
    trivial.points = 3;
    CHECK(enumerate_group(trivial).size() == 1);

    CHECK_THROWS_AS(enumerate_group(s3(), 4), SizeError);
}

TEST_CASE("cycle index and orbit counting") {
    CHECK(cycle_index(s3(), Rational(2)) == 4);
    CHECK(orbit_count(s3(), 2) == 4);

    PermutationGroup trivial;
    trivial.points = 3;
    CHECK(cycle_index(trivial, Rational(5)) == 125);
    CHECK(orbit_count(trivial, 5) == 125);

    PermutationGroup pair;
    pair.points = 4;
    pair.generators.push_back(Permutation({1, 0, 3, 2}));
    CHECK(cycle_index(pair, Rational(2)) == 10);
    CHECK(orbit_count(pair, 2) == 10);
}

TEST_CASE("orbit counting matches the cycle index on assorted groups") {
    std::vector<PermutationGroup> groups;
    groups.push_back(s3());
    {
        PermutationGroup s4;  // symmetric group on four points
        s4.points = 4;
        s4.generators.push_back(Permutation({1, 0, 2, 3}));
        s4.generators.push_back(Permutation({1, 2, 3, 0}));
        groups.push_back(s4);
    }
    {
        PermutationGroup d4;  // square symmetries
        d4.points = 4;
        d4.generators.push_back(Permutation({1, 2, 3, 0}));
        d4.generators.push_back(Permutation({3, 2, 1, 0}));
        groups.push_back(d4);
    }
    {
        PermutationGroup c6;  // rotation on six points
        c6.points = 6;
        c6.generators.push_back(Permutation({1, 2, 3, 4, 5, 0}));
        groups.push_back(c6);
    }
    for (const auto& g : groups) {
        for (std::uint64_t x : {std::uint64_t(2), std::uint64_t(3)}) {
            CHECK(cycle_index(g, Rational(x)) == Rational(orbit_count(g, x)));
        }
    }
}

TEST_CASE("code to group construction") {
    PermutationGroup g = code_to_group(u12_code());
    CHECK(g.points == 4);
    REQUIRE(g.generators.size() == 1);
    CHECK(g.generators[0] == Permutation({1, 0, 3, 2}));

    PermutationGroup gid = code_to_group(GeneratingMatrix(Gf2Matrix::identity(2)));
    REQUIRE(gid.generators.size() == 2);
    CHECK(gid.generators[0] == Permutation({1, 0, 2, 3}));
    CHECK(gid.generators[1] == Permutation({0, 1, 3, 2}));

    PermutationGroup gempty = code_to_group(GeneratingMatrix(Gf2Matrix(0, 0)));
    CHECK(gempty.points == 0);
    CHECK(enumerate_group(gempty).size() == 1);
}

TEST_CASE("code group bridge worked examples") {
    auto check = code_group_check(u12_code(), Rational(2));
    CHECK(check.lhs == 20);
    CHECK(check.rhs == 20);
    CHECK(check.equal);
    CHECK(check.group_size == 2);
    CHECK(check.group_size_is_2r);

    GeneratingMatrix id2(Gf2Matrix::identity(2));
    for (const Rational x : {Rational(2), Rational(3)}) {
        auto c = code_group_check(id2, x);
        // x^4 + 2x^3 + x^2 = x^4 (1 + 1/x)^2
        CHECK(c.lhs == x * x * x * x + 2 * x * x * x + x * x);
        CHECK(c.equal);
    }

    auto empty_check = code_group_check(GeneratingMatrix(Gf2Matrix(0, 2)), Rational(5, 2));
    CHECK(empty_check.lhs == 1);
    CHECK(empty_check.rhs == rational_pow(Rational(5, 2), 4) *
                                 weight_enumerator(GeneratingMatrix(Gf2Matrix(0, 2)),
                                                   Rational(2, 5)));
    CHECK(empty_check.equal);
}

TEST_CASE("generator words cover the group with cycle count nu minus weight") {
    SplitMix64 rng(73);
    for (int inst = 0; inst < 10; ++inst) {
        GeneratingMatrix code = verify::random_code(rng, 5, 6);
        PermutationGroup group = code_to_group(code);
        const std::size_t r = code.dimension();
        const std::size_t nu = group.points;
        std::set<std::vector<std::uint32_t>> words;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << r); ++m) {
            Permutation g = Permutation::identity(nu);
            std::size_t weight = 0;
            std::vector<int> word(code.length(), 0);
            for (std::size_t i = 0; i < r; ++i) {
                if (!(m >> i & 1)) continue;
                g = g.then(group.generators[i]);
                for (std::size_t j = 0; j < code.length(); ++j)
                    word[j] ^= code.matrix().get(i, j);
            }
            for (int b : word) weight += b;
            CHECK(cycle_count(g) == nu - weight);
            words.insert(g.images());
        }
        CHECK(words.size() == std::size_t(1) << r);  // distinct words, so |G| = 2^r
        CHECK(enumerate_group(group).size() == words.size());
    }
}

TEST_CASE("random code instances satisfy the bridge at several parameters") {
    std::vector<Rational> xs{Rational(2), Rational(3), Rational(5, 2)};
    auto res = verify::code_group_suite(15, 301, xs, true);
    INFO(res.first_failure);
    CHECK(res.ok());
}

TEST_CASE("group text format") {
    std::istringstream in("3 2\n2 1 3\n2 3 1\n");
    PermutationGroup g = read_group(in);
    CHECK(g.points == 3);
    REQUIRE(g.generators.size() == 2);
    CHECK(g.generators[0] == Permutation({1, 0, 2}));
    CHECK(g.generators[1] == Permutation({1, 2, 0}));

    std::ostringstream out;
    write_group(out, g);
    std::istringstream back(out.str());
    PermutationGroup g2 = read_group(back);
    CHECK(g2.points == g.points);
    CHECK(g2.generators.size() == g.generators.size());
    for (std::size_t i = 0; i < g.generators.size(); ++i)
        CHECK(g2.generators[i] == g.generators[i]);

    std::istringstream bad("3 1\n1 1 2\n");
    CHECK_THROWS_AS(read_group(bad), InputError);
}
