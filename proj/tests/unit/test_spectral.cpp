#include "hurwitz/jacobi.hpp"
#include "hurwitz/spectral.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hurwitz;
using hurwitz::testing::r;

namespace {

WPolynomial w(int n, int i, int j) { return WPolynomial::variable(n, EdgeVar(i, j)); }

WPolynomial trees_from_oracle(int n) {
    WPolynomial t(n);
    for (const auto& edges : hurwitz::testing::labeled_trees(n)) {
        std::vector<Monomial::Factor> f;
        for (auto [a, b] : edges) f.emplace_back(EdgeVar(a, b), 1u);
        t.add_term(Monomial(f), 1);
    }
    return t;
}

GraphClass cls(const char* s) { return parse_graph_class(s); }

// Edges of the underlying simple graph lying on at least one cycle: an edge is on a
// cycle iff its endpoints stay connected after removing it.
int cyclic_edges(const GraphClass& c) {
    auto edges = c.edges();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    int count = 0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        std::vector<int> comp(static_cast<std::size_t>(c.vertex_count() + 1));
        for (int x = 0; x <= c.vertex_count(); ++x) comp[static_cast<std::size_t>(x)] = x;
        auto find = [&](int x) {
            while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
            return x;
        };
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (e != k) comp[static_cast<std::size_t>(find(edges[e].first))] = find(edges[e].second);
        if (find(edges[k].first) == find(edges[k].second)) ++count;
    }
    return count;
}

int sign_of(int exponent) { return exponent % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("tree polynomial") {
    CHECK(tree_poly(1) == WPolynomial::constant(1, 1));
    CHECK(tree_poly(2) == w(2, 1, 2));
    CHECK(tree_poly(3) == w(3, 1, 2) * w(3, 1, 3) + w(3, 1, 2) * w(3, 2, 3) + w(3, 1, 3) * w(3, 2, 3));
    for (int n = 2; n <= 6; ++n) {
        CHECK(tree_poly(n, TreeMethod::kirchhoff) == trees_from_oracle(n));
        CHECK(tree_poly(n, TreeMethod::pruefer) == trees_from_oracle(n));
        CHECK(tree_poly(n).evaluate_at(1) == Rational(ipow(n, static_cast<unsigned>(n - 2))));
    }
    CHECK(tree_poly(7).evaluate_at(1) == 16807);
}

TEST_CASE("trace powers agree with exact numeric matrix powers") {
    std::mt19937_64 rng(hurwitz::testing::kSeed + 20);
    for (int n = 2; n <= 5; ++n)
        for (unsigned k = 1; k <= 5; ++k) {
            auto weight = hurwitz::testing::random_weights(n, rng);
            auto value = [&](EdgeVar e) { return weight.at(e); };
            auto a = hurwitz::testing::numeric_laplacian(n, value);
            CHECK(trace_power(n, k).evaluate(value) == hurwitz::testing::trace_of_power(a, k));
        }
    CHECK(trace_power(3, 0) == WPolynomial::constant(3, 3));
}

TEST_CASE("r_{1,3} in the graph basis") {
    auto tr = collect(trace_power(3, 2));
    CHECK(tr.size() == 2);
    CHECK(coefficient(tr, cls("1-2;1-2")) == 8);
    CHECK(coefficient(tr, cls("1-2;2-3")) == 2);
    auto r1 = collect(r_part(1, 3));
    CHECK(coefficient(r1, cls("1-2;1-2")) == r(1, 3));
    CHECK(coefficient(r1, cls("1-2;2-3")) == r(1, 12));
    CHECK_THROWS_AS(r_part(0, 3), std::invalid_argument);
}

TEST_CASE("spider coefficients of r_g") {
    // a single edge with multiplicity 2g
    CHECK(coefficient(collect(r_part(1, 2)), cls("1-2;1-2")) == r(1, 3));
    CHECK(coefficient(collect(r_part(2, 2)), cls("1-2;1-2;1-2;1-2")) == r(-2, 15));
    // star with 2g legs at n = 2g+1: B_{2g}/(2g)
    CHECK(coefficient(collect(r_part(1, 3)), cls("1-2;2-3")) == r(1, 12));
    CHECK(coefficient(collect(r_part(2, 5)), cls("1-2;1-3;1-4;1-5")) == r(-1, 120));
}

TEST_CASE("r_g is supported on connected graphs with signs (-1)^{g+1+b(G)}") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}}) {
        for (const auto& [c, coef] : collect(r_part(g, n))) {
            CHECK(c.is_connected());
            CHECK(c.edge_count() == 2 * g);
            CHECK_MESSAGE(sgn(coef) == sign_of(g + 1 + cyclic_edges(c)), g << " " << c.to_string() << " " << to_string(coef));
        }
    }
}

TEST_CASE("the sign (-1)^{b(G)} alone already fails for g = 2") {
    auto c = cls("1-2;1-3;1-4;1-5");
    CHECK(cyclic_edges(c) == 0);
    CHECK(sgn(coefficient(collect(r_part(2, 5)), c)) == -1);
    CHECK(cyclic_edges(cls("1-2;1-2;2-3")) == 0);
    CHECK(cyclic_edges(cls("1-2;2-3;1-3;3-4")) == 3);
}

TEST_CASE("R_g multiplies over disjoint unions") {
    auto R2 = collect(R_part(2, 4));
    auto R1 = collect(R_part(1, 4));
    for (const auto& [c, coef] : R2) {
        auto comps = c.components();
        if (comps.size() != 2) continue;
        CHECK(coef == coefficient(R1, comps[0]) * coefficient(R1, comps[1]));
    }
    CHECK(coefficient(R2, cls("1-2;1-2;3-4;3-4")) == r(1, 9));
    CHECK(R_part(0, 3) == WPolynomial::constant(3, 1));
    CHECK(R_part(1, 3) == r_part(1, 3));
}

TEST_CASE("the enumerated polynomial factors as (n+2g-1)! T_n R_{g,n}") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 2}, {0, 4}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {1, 4}, {3, 3}, {0, 5}}) {
        auto rep = verify_div(g, n);
        CHECK_MESSAGE(rep.equal, "g=" << g << " n=" << n);
    }
}

TEST_CASE("rho and the closed Hurwitz numbers") {
    CHECK(rho(0, 5) == 1);
    CHECK(rho(1, 3) == r(3, 4));
    for (int n = 1; n <= 7; ++n) CHECK(rho(1, n) == r((n - 1) * n * n, 24));
    CHECK(hurwitz_closed(1, 3) == 9);
    CHECK(hurwitz_closed(0, 1) == 1);
    CHECK(hurwitz_closed(3, 1) == 0);
    CHECK(hurwitz_closed(2, 2) == r(1, 2));
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}, {1, 4}, {0, 5}, {1, 5}})
        CHECK(hurwitz_closed(g, n) == hurwitz_number(n, g));
    // closed form equals (n+2g-1)!/n! T_n(1) R_{g,n}(1)
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 4}})
        CHECK(hurwitz_closed(g, n) == ratio(factorial(static_cast<unsigned>(n + 2 * g - 1)), factorial(static_cast<unsigned>(n))) *
                                          tree_poly(n).evaluate_at(1) * R_part(g, n).evaluate_at(1));
}

TEST_CASE("Jacobi eigenvalues") {
    auto ev = jacobi_eigenvalues({2, 1, 1, 2}, 2);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(1));
    CHECK(ev[1] == doctest::Approx(3));
    auto k4 = laplacian(4).evaluate([](EdgeVar) { return Rational(1); });
    ev = jacobi_eigenvalues(k4, 4);
    CHECK(std::abs(ev[0]) < 1e-12);
    for (int i = 1; i < 4; ++i) CHECK(ev[static_cast<std::size_t>(i)] == doctest::Approx(4));
    CHECK_THROWS_AS(jacobi_eigenvalues({1, 2, 3, 4}, 2), std::invalid_argument);
}

TEST_CASE("signed eigenvalue sums reproduce P_{g,n}") {
    std::mt19937_64 rng(hurwitz::testing::kSeed + 21);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {1, 4}, {2, 3}}) {
        auto exact = hurwitz_poly(n, g);
        for (int trial = 0; trial < 10; ++trial) {
            auto weight = hurwitz::testing::random_weights(n, rng);
            auto rep = eval_sumsign(g, n, [&](EdgeVar e) { return weight.at(e); }, exact);
            CHECK(rep.relative_error < 1e-8);
            CHECK(rep.kirchhoff_relative_error < 1e-9);
            CHECK(std::abs(rep.dropped_eigenvalue) < 1e-9);
            CHECK_FALSE(rep.multiplicity_warning);
        }
    }
}

TEST_CASE("a disconnected weight pattern raises the multiplicity warning") {
    auto exact = hurwitz_poly(3, 0);
    auto rep = eval_sumsign(0, 3, [](EdgeVar e) { return e == EdgeVar(1, 2) ? Rational(1) : Rational(0); }, exact);
    CHECK(rep.multiplicity_warning);
}

TEST_CASE("r and R are projection consistent and homogeneous") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 3; n <= 5; ++n) {
            CHECK(project(r_part(g, n)) == r_part(g, n - 1));
            CHECK(project(R_part(g, n)) == R_part(g, n - 1));
            CHECK(R_part(g, n).is_homogeneous(static_cast<unsigned>(2 * g)));
        }
}

TEST_CASE("collected R_g coefficients are positive for g <= 2, n <= 5") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 2; n <= 5; ++n)
            for (const auto& [c, coef] : collect(R_part(g, n))) CHECK_MESSAGE(coef > 0, c.to_string());
}

TEST_CASE("spider coefficients of R_g") {
    CHECK(coefficient(collect(R_part(1, 3)), cls("1-2;1-3")) == r(1, 12));
    CHECK(coefficient(collect(R_part(2, 5)), cls("1-2;1-3;1-4;1-5")) == r(1, 80));
    CHECK(coefficient(collect(r_part(2, 5)), cls("1-2;1-3;1-4;1-5")) == bernoulli(4) / 4);
}

TEST_CASE("disconnected classes vanish in r_g") {
    for (int g = 1; g <= 2; ++g)
        for (int n = 2; n <= 5; ++n)
            for (const auto& [c, coef] : collect(r_part(g, n))) CHECK(c.is_connected());
}
