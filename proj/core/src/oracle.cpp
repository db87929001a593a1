#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace hurwitz {

BudgetExceeded::BudgetExceeded(const Integer& estimate, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + estimate.get_str() + " leaf visits, budget is " +
                         std::to_string(budget)),
      estimate_(estimate),
      budget_(budget) {}

FactorizationTask FactorizationTask::cycle(int n, int g) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return {CycleType({n}), n + 2 * g - 1};
}

FactorizationTask FactorizationTask::lambda(const CycleType& target, int g) {
    if (target.length() == 0) throw std::invalid_argument("empty cycle type");
    return {target, target.size() + 2 * g - 2 + target.length()};
}

bool FactorizationTask::feasible() const {
    if (m < 0) return false;
    return (m - (n() - target.length())) % 2 == 0;
}

Integer FactorizationTask::leaf_count() const {
    if (m < 0) return 0;
    const int n_ = n();
    return ipow(Integer(n_ * (n_ - 1) / 2), static_cast<unsigned>(m));
}

namespace {

constexpr int kMaxN = 16;

struct Enumerator {
    int n;
    int m;
    std::vector<int> target;  // sorted parts
    std::vector<Transposition> ts;

    using Counts = std::unordered_map<std::string, std::uint64_t>;

    // inverse of the running product; left-multiplying by t swaps two inverse entries
    bool leaf_matches(const std::array<std::uint8_t, kMaxN>& inv) const {
        std::array<bool, kMaxN> seen{};
        std::array<int, kMaxN> parts{};
        int s = 0;
        for (int start = 0; start < n; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            int len = 0;
            for (int x = start; !seen[static_cast<std::size_t>(x)]; x = inv[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = true;
                ++len;
            }
            if (s >= static_cast<int>(target.size())) return false;
            parts[static_cast<std::size_t>(s++)] = len;
        }
        if (s != static_cast<int>(target.size())) return false;
        std::sort(parts.begin(), parts.begin() + s);
        return std::equal(target.begin(), target.end(), parts.begin());
    }

    void run(int depth, std::array<std::uint8_t, kMaxN>& inv, std::string& exps, Counts& out) const {
        if (depth == m) {
            if (leaf_matches(inv)) ++out[exps];
            return;
        }
        for (std::size_t k = 0; k < ts.size(); ++k) {
            descend(k, depth, inv, exps, out);
        }
    }

    void descend(std::size_t k, int depth, std::array<std::uint8_t, kMaxN>& inv, std::string& exps, Counts& out) const {
        const auto a = static_cast<std::size_t>(ts[k].i - 1);
        const auto b = static_cast<std::size_t>(ts[k].j - 1);
        std::swap(inv[a], inv[b]);
        ++exps[k];
        run(depth + 1, inv, exps, out);
        --exps[k];
        std::swap(inv[a], inv[b]);
    }
};

}  // namespace

WPolynomial enumerate_factorizations(const FactorizationTask& task, const OracleOptions& opts) {
    const int n = task.n();
    WPolynomial result(n);
    if (n > kMaxN) throw std::invalid_argument("oracle supports n <= 16");
    if (!task.feasible()) return result;
    Integer leaves = task.leaf_count();
    if (leaves > Integer(std::to_string(opts.budget))) throw BudgetExceeded(leaves, opts.budget);

    Enumerator e{n, task.m, task.target.parts(), all_transpositions(n)};
    Enumerator::Counts total;
    std::array<std::uint8_t, kMaxN> identity{};
    for (int x = 0; x < n; ++x) identity[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);

    const unsigned threads = std::max(1u, opts.threads);
    if (task.m == 0 || e.ts.empty() || threads == 1) {
        auto inv = identity;
        std::string exps(e.ts.size(), '\0');
        e.run(0, inv, exps, total);
    } else {
        // split over the first transposition; each worker owns a private accumulator
        std::atomic<std::size_t> next{0};
        std::mutex merge_mu;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(threads, e.ts.size()); ++w) {
            pool.emplace_back([&] {
                Enumerator::Counts local;
                for (std::size_t k; (k = next.fetch_add(1)) < e.ts.size();) {
                    auto inv = identity;
                    std::string exps(e.ts.size(), '\0');
                    e.descend(k, 0, inv, exps, local);
                }
                std::lock_guard lock(merge_mu);
                for (const auto& [key, c] : local) total[key] += c;
            });
        }
        for (auto& t : pool) t.join();
    }

    for (const auto& [key, c] : total) {
        std::vector<Monomial::Factor> f;
        for (std::size_t k = 0; k < key.size(); ++k)
            if (key[k]) f.emplace_back(EdgeVar(e.ts[k].i, e.ts[k].j), static_cast<unsigned>(static_cast<unsigned char>(key[k])));
        result.add_term(Monomial(std::move(f)), Rational(Integer(std::to_string(c))));
    }
    return result;
}

WPolynomial hurwitz_poly(int n, int g, const OracleOptions& opts) {
    return enumerate_factorizations(FactorizationTask::cycle(n, g), opts);
}

WPolynomial hurwitz_poly_lambda(const CycleType& lambda, int g, const OracleOptions& opts) {
    return enumerate_factorizations(FactorizationTask::lambda(lambda, g), opts);
}

Rational hurwitz_number(int n, int g, const OracleOptions& opts) {
    return hurwitz_poly(n, g, opts).evaluate_at(1) / Rational(factorial(static_cast<unsigned>(n)));
}

Rational hurwitz_number_lambda(const CycleType& lambda, int g, const OracleOptions& opts) {
    return hurwitz_poly_lambda(lambda, g, opts).evaluate_at(1) /
           Rational(factorial(static_cast<unsigned>(lambda.size())));
}

}  // namespace hurwitz
