#include "hurwitz/permgroup.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hurwitz;
using hurwitz::testing::random_permutation;

TEST_CASE("compose applies the right factor first") {
    auto t12 = Permutation::parse(3, "(1 2)");
    auto t23 = Permutation::parse(3, "(2 3)");
    CHECK(compose(t12, t12).is_identity());
    // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    CHECK(compose(t12, t23) == Permutation::parse(3, "(1 2 3)"));
    auto p = Permutation::parse(5, "(1 4)(2 5 3)");
    CHECK(compose(Permutation(5), p) == p);
    CHECK(compose(p, Permutation(5)) == p);
    CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("cycle types include fixed points") {
    CHECK(cycle_type(Permutation(3)).parts() == std::vector<int>{1, 1, 1});
    CHECK(cycle_type(Permutation::parse(3, "(1 2 3)")).parts() == std::vector<int>{3});
    // t1=(12), t2=(13), t3=(12), t4=(13), product t4 t3 t2 t1 = (1 3 2)
    std::vector<Transposition> ts{{1, 2}, {1, 3}, {1, 2}, {1, 3}};
    auto p = product_right_to_left(3, ts);
    CHECK(p == Permutation::parse(3, "(1 3 2)"));
    CHECK(cycle_type(p).parts() == std::vector<int>{3});
}

TEST_CASE("n-cycle detection") {
    CHECK(is_n_cycle(Permutation::parse(3, "(1 2 3)")));
    CHECK_FALSE(is_n_cycle(Permutation(2)));
    CHECK_FALSE(is_n_cycle(Permutation(4)));
    CHECK_FALSE(is_n_cycle(Permutation::parse(4, "(1 2)")));
    CHECK(cycle_type(Permutation::parse(4, "(1 2)")).parts() == std::vector<int>{1, 1, 2});
    CHECK(is_n_cycle(Permutation(1)));
}

TEST_CASE("cycle notation round trip and rejection") {
    auto p = Permutation::parse(6, "(1 2 3)(4 5)");
    CHECK(p.to_string() == "(1 2 3)(4 5)");
    CHECK(Permutation::parse(6, p.to_string()) == p);
    CHECK(Permutation::parse(3, "()").is_identity());
    CHECK(Permutation::parse(3, "").to_string() == "()");
    CHECK_THROWS_AS(Permutation::parse(3, "(1 4)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(3, "(1 2)(2 3)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(3, "(1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Transposition(2, 2), std::invalid_argument);
}

TEST_CASE("cycle type helpers") {
    auto l = parse_cycle_type("2,1,1");
    CHECK(l.parts() == std::vector<int>{1, 1, 2});
    CHECK(l.size() == 4);
    CHECK(l.length() == 3);
    CHECK(l.aut_count() == 2);
    CHECK(l.class_size() == 6);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    std::uint64_t total = 0;
    for (const auto& c : partitions_of(5)) total += c.class_size();
    CHECK(total == 120);
    CHECK_THROWS_AS(parse_cycle_type("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(CycleType({0, 2}), std::invalid_argument);
}

TEST_CASE("group laws on random permutations") {
    std::mt19937_64 rng(hurwitz::testing::kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        auto a = random_permutation(n, rng), b = random_permutation(n, rng), c = random_permutation(n, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, a.inverse()).is_identity());
        // conjugation preserves cycle type
        CHECK(cycle_type(compose(compose(b, a), b.inverse())) == cycle_type(a));
    }
}

TEST_CASE("transposition products: n - #cycles has the parity of the tuple length") {
    std::mt19937_64 rng(hurwitz::testing::kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const int m = static_cast<int>(rng() % 9);
        auto ts = all_transpositions(n);
        std::vector<Transposition> tuple;
        for (int k = 0; k < m; ++k) tuple.push_back(ts[rng() % ts.size()]);
        auto p = product_right_to_left(n, tuple);
        CHECK((n - static_cast<int>(p.cycles().size()) - m) % 2 == 0);
    }
}
