#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smallcover/gf2.hpp"

using namespace smallcover;

TEST_CASE("vector parsing and arithmetic") {
    auto v = Gf2Vec::parse("101");
    CHECK(v.len == 3);
    CHECK(v.get(0));
    CHECK(!v.get(1));
    CHECK(v.get(2));
    CHECK(v.str() == "101");
    CHECK((v + v).is_zero());
    CHECK((Gf2Vec::parse("110") + Gf2Vec::parse("011")) == Gf2Vec::parse("101"));
    CHECK_THROWS_AS(Gf2Vec::parse("1a0"), DomainError);
}

TEST_CASE("dot pairing") {
    CHECK(Gf2Vec::parse("111").dot(Gf2Vec::parse("100")));
    CHECK(!Gf2Vec::parse("111").dot(Gf2Vec::parse("110")));
}

TEST_CASE("echelon subspaces are canonical") {
    Gf2Subspace a(3), b(3);
    a.insert(Gf2Vec::parse("100"));
    a.insert(Gf2Vec::parse("110"));
    b.insert(Gf2Vec::parse("010"));
    b.insert(Gf2Vec::parse("100"));
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.contains(Gf2Vec::parse("110")));
    CHECK(!a.contains(Gf2Vec::parse("001")));
    CHECK(a.coset_rep(Gf2Vec::parse("111")) == Gf2Vec::parse("001"));
}

TEST_CASE("rank") {
    CHECK(gf2_rank({Gf2Vec::parse("100"), Gf2Vec::parse("010"), Gf2Vec::parse("110")}, 3) == 2);
    CHECK(gf2_rank({Gf2Vec::parse("100"), Gf2Vec::parse("010"), Gf2Vec::parse("001")}, 3) == 3);
}

TEST_CASE("solve recovers coordinates in random bases") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        // random invertible matrix: accumulate until full rank
        std::vector<Gf2Vec> cols;
        Gf2Subspace span(n);
        while (span.dim() < n) {
            Gf2Vec v(static_cast<std::uint32_t>(rng()) & ((1u << n) - 1), n);
            if (span.insert(v)) cols.push_back(v);
        }
        Gf2Vec target(static_cast<std::uint32_t>(rng()) & ((1u << n) - 1), n);
        auto c = gf2_solve(cols, target);
        Gf2Vec sum = Gf2Vec::zero(n);
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (c[i]) sum = sum + cols[i];
        CHECK(sum == target);
    }
}
