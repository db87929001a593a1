// One line per acceptance criterion; exit status is nonzero if any criterion fails.

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/spectral.hpp"
#include "hurwitz/surfaces.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace hurwitz;
using hurwitz::testing::r;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "failed: " << what << "; ";
        pass = pass && ok;
    }
};

OracleOptions parallel() {
    OracleOptions o;
    o.threads = std::max(1u, std::thread::hardware_concurrency());
    return o;
}

const std::vector<std::pair<int, int>> kDivCases{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 1}};

void tree_factorization(Outcome& o) {
    for (auto [n, g] : kDivCases) {
        auto rep = verify_div(g, n, parallel());
        o.require(rep.equal, "P_{" + std::to_string(g) + "," + std::to_string(n) + "}");
    }
    o.note << kDivCases.size() << " (n,g) pairs equal coefficient for coefficient";
}

void genus_zero(Outcome& o) {
    for (int n = 2; n <= 5; ++n) {
        o.require(hurwitz_poly(n, 0) == tree_poly(n) * Rational(factorial(static_cast<unsigned>(n - 1))),
                  "P_{0," + std::to_string(n) + "}");
        WPolynomial trees(n);
        for (const auto& edges : hurwitz::testing::labeled_trees(n)) {
            std::vector<Monomial::Factor> f;
            for (auto [a, b] : edges) f.emplace_back(EdgeVar(a, b), 1u);
            trees.add_term(Monomial(f), 1);
        }
        o.require(tree_poly(n) == trees, "T_" + std::to_string(n) + " against Pruefer decoding");
    }
    for (int n = 1; n <= 7; ++n)
        o.require(tree_poly(n).evaluate_at(1) == Rational(n >= 2 ? ipow(n, static_cast<unsigned>(n - 2)) : Integer(1)),
                  "T_" + std::to_string(n) + "(1)");
    o.note << "P_{0,n} = (n-1)! T_n for n <= 5, T_n(1) = n^{n-2} for n <= 7";
}

void closed_numbers(Outcome& o) {
    for (auto [n, g] : kDivCases) {
        Rational oracle = hurwitz_number(n, g, parallel());
        o.require(hurwitz_closed(g, n) == oracle, "h_{" + std::to_string(g) + "," + std::to_string(n) + "}");
    }
    o.require(hurwitz_closed(1, 3) == 9, "h_{1,3} = 9");
    o.require(ratio(hurwitz::testing::count_tuples(3, 4, CycleType({3})), 6) == 9, "54 tuples / 3!");
    for (int g = 0; g <= 3; ++g) o.require(hurwitz_closed(g, 2) == r(1, 2), "h_{g,2} = 1/2");
    o.note << "closed form matches enumeration; h_{1,3} = 9, h_{g,2} = 1/2";
}

void spider_coefficients(Outcome& o) {
    for (int g = 1; g <= 2; ++g) {
        const int n = 2 * g + 1;
        std::vector<std::pair<int, int>> legs;
        for (int k = 2; k <= n; ++k) legs.emplace_back(1, k);
        GraphClass spider = canonicalize(n, legs);
        Rational big = coefficient(collect(R_part(g, n)), spider);
        Rational small = coefficient(collect(r_part(g, n)), spider);
        o.require(big == Rational(1) / Rational((1 << (2 * g)) * (2 * g + 1)), "R_g spider coefficient");
        o.require(small == bernoulli(static_cast<unsigned>(2 * g)) / (2 * g), "r_g spider coefficient");
        o.note << "g=" << g << ": " << to_string(big) << ", " << to_string(small) << "; ";
    }
}

void disconnected_classes(Outcome& o) {
    std::size_t disconnected = 0;
    for (int n = 2; n <= 5; ++n) {
        std::vector<GraphSeries> R{collect(R_part(0, n)), collect(R_part(1, n)), collect(R_part(2, n))};
        for (int g = 1; g <= 2; ++g) {
            for (const auto& [c, coef] : collect(r_part(g, n))) o.require(c.is_connected(), "disconnected class in r_g");
            for (const auto& [c, coef] : R[static_cast<std::size_t>(g)]) {
                if (c.is_connected()) continue;
                ++disconnected;
                Rational product = 1;
                for (const auto& comp : c.components()) {
                    const auto e = comp.edge_count();
                    product *= e % 2 ? Rational(0) : coefficient(R[e / 2], comp);
                }
                o.require(product == coef, "multiplicativity for " + c.to_string());
            }
        }
    }
    o.require(disconnected > 0, "no disconnected classes seen");
    o.note << disconnected << " disconnected classes in R_g checked, none in r_g";
}

void projection(Outcome& o) {
    for (int g = 0; g <= 2; ++g)
        for (int n = 3; n <= 5; ++n)
            o.require(project(R_part(g, n)) == R_part(g, n - 1), "R_{" + std::to_string(g) + "," + std::to_string(n) + "}");
    o.note << "project(R_{g,n}) = R_{g,n-1} for g <= 2, n <= 5";
}

void decoration_sums(Outcome& o) {
    std::size_t checked = 0;
    for (const auto& g : connected_multigraphs(5, true)) {
        const int b = g.betti1();
        if (b != 2 && b != 4) continue;
        ++checked;
        o.require(verify_spiders(g).check, g.to_string());
    }
    auto theta = verify_spiders(MultiGraph::parse("1-2;1-2;1-2"));
    o.require(theta.decoration_count == 6 && theta.decoration_sum == r(1, 2) && theta.emb == 4 && theta.one_faced == 2,
              "triple edge");
    auto hz1 = MultiGraph::parse("1-1;1-1");
    o.require(one_faced_count(hz1) == 2 && emb_count(hz1) == 6, "two loops");
    auto hz2 = MultiGraph::parse("1-1;1-1;1-1;1-1");
    o.require(one_faced_count(hz2) == 1008 && emb_count(hz2) == 5040 && verify_spiders(hz2).check, "four loops");
    o.note << checked << " graphs with <= 5 edges; triple edge 6 x 1/12, 2 of 4; loops 2 of 6, 1008 of 5040";
}

void faces_cycles(Outcome& o) {
    std::size_t graphs = 0, numberings = 0;
    for (const auto& g : connected_multigraphs(6, false)) {
        ++graphs;
        std::vector<int> num(static_cast<std::size_t>(g.edge_count()));
        std::iota(num.begin(), num.end(), 1);
        do {
            ++numberings;
            auto rep = faces_vs_cycles(g, num);
            o.require(rep.ok, g.to_string() + ": " + rep.failure);
        } while (std::next_permutation(num.begin(), num.end()));
    }
    o.note << graphs << " graphs, " << numberings << " numberings";
}

void cut_and_join(Outcome& o) {
    auto base = verify_cutjoin(3, 4, parallel());
    o.require(base.equal, "n_max = 3, m_max = 4");
    auto stretch = verify_cutjoin(4, 5, parallel());
    o.require(stretch.equal, "n_max = 4, m_max = 5");
    o.note << base.terms_compared << " terms at (3,4), " << stretch.terms_compared << " terms at (4,5)";
}

void sumsign(Outcome& o) {
    std::mt19937_64 rng(hurwitz::testing::kSeed);
    double worst = 0, worst_k = 0;
    for (auto [n, g] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}}) {
        auto exact = hurwitz_poly(n, g);
        for (int t = 0; t < 100; ++t) {
            auto w = hurwitz::testing::random_weights(n, rng);
            auto rep = eval_sumsign(g, n, [&](EdgeVar e) { return w.at(e); }, exact);
            worst = std::max(worst, rep.relative_error);
            worst_k = std::max(worst_k, rep.kirchhoff_relative_error);
        }
    }
    o.require(worst < 1e-8, "eigenvalue formula");
    o.require(worst_k < 1e-8, "sigma product");
    o.note << "max relative error " << worst << ", Kirchhoff " << worst_k;
}

void positivity(Outcome& o) {
    std::size_t count = 0;
    for (int g = 1; g <= 2; ++g)
        for (int n = 2; n <= 5; ++n)
            for (const auto& [c, coef] : collect(R_part(g, n))) {
                ++count;
                o.require(coef > 0, "counterexample " + c.to_string());
            }
    o.note << count << " coefficients, all positive";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"P = (n+2g-1)! T_n R_{g,n}", tree_factorization},
        {"genus zero and Cayley", genus_zero},
        {"closed Hurwitz numbers", closed_numbers},
        {"spider coefficients", spider_coefficients},
        {"disconnected classes", disconnected_classes},
        {"projection consistency", projection},
        {"decorations vs one-faced embeddings", decoration_sums},
        {"faces vs cycles", faces_cycles},
        {"cut-and-join", cut_and_join},
        {"eigenvalue formula", sumsign},
        {"positivity scan", positivity},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %-36s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.note.str().c_str(), secs);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures ? 1 : 0;
}
