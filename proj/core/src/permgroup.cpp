#include "hurwitz/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Transposition::Transposition(int a, int b) {
    if (a == b) throw std::invalid_argument("transposition needs two distinct points");
    if (a < 1 || b < 1) throw std::invalid_argument("transposition points are one-based");
    i = std::min(a, b);
    j = std::max(a, b);
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("cycle type parts must be positive");
    std::sort(parts_.begin(), parts_.end());
}

int CycleType::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::uint64_t CycleType::aut_count() const {
    std::uint64_t r = 1;
    std::size_t k = 0;
    while (k < parts_.size()) {
        std::size_t run = 1;
        while (k + run < parts_.size() && parts_[k + run] == parts_[k]) ++run;
        for (std::size_t f = 2; f <= run; ++f) r *= f;
        k += run;
    }
    return r;
}

std::uint64_t CycleType::class_size() const {
    // n! / (prod lambda_i * |Aut lambda|)
    std::uint64_t fact = 1;
    for (int f = 2; f <= size(); ++f) fact *= static_cast<std::uint64_t>(f);
    std::uint64_t denom = aut_count();
    for (int p : parts_) denom *= static_cast<std::uint64_t>(p);
    return fact / denom;
}

std::string CycleType::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

CycleType parse_cycle_type(std::string_view text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cycle type part '" + cur + "'");
        }
        if (used != cur.size()) throw std::invalid_argument("bad cycle type part '" + cur + "'");
        parts.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
        else cur += c;
    }
    flush();
    if (parts.empty()) throw std::invalid_argument("empty cycle type");
    return CycleType(std::move(parts));
}

std::vector<CycleType> partitions_of(int n) {
    std::vector<CycleType> out;
    std::vector<int> cur;
    // nondecreasing parts, each >= previous
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = min_part; p <= remaining; ++p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(rec, n, 1);
    return out;
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("images do not form a bijection of {1..n}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_transposition(int n, Transposition t) {
    if (t.j > n) throw std::invalid_argument("transposition outside {1..n}");
    Permutation p(n);
    std::swap(p.images_[static_cast<std::size_t>(t.i - 1)], p.images_[static_cast<std::size_t>(t.j - 1)]);
    return p;
}

Permutation Permutation::parse(int n, std::string_view text) {
    Permutation p(n);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("unexpected character in cycle notation");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v < 1 || v > n) throw std::invalid_argument("cycle entry outside {1..n}");
            if (used[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("point repeated in cycle notation");
            used[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p.images_[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation q(size());
    for (int i = 1; i <= size(); ++i) q.images_[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return q;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> c;
        int x = start;
        while (!seen[static_cast<std::size_t>(x - 1)]) {
            seen[static_cast<std::size_t>(x - 1)] = true;
            c.push_back(x);
            x = (*this)(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
        os << ')';
    }
    return any ? os.str() : "()";
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: permutation sizes differ");
    std::vector<int> img(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) img[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation::from_images(std::move(img));
}

Permutation product_right_to_left(int n, std::span<const Transposition> ts) {
    Permutation p(n);
    for (const auto& t : ts) p = compose(Permutation::from_transposition(n, t), p);
    return p;
}

CycleType cycle_type(const Permutation& p) {
    std::vector<int> parts;
    for (const auto& c : p.cycles()) parts.push_back(static_cast<int>(c.size()));
    return CycleType(std::move(parts));
}

bool is_n_cycle(const Permutation& p) {
    if (p.size() == 0) return false;
    int len = 1;
    for (int x = p(1); x != 1; x = p(x)) ++len;
    return len == p.size();
}

std::vector<Transposition> all_transpositions(int n) {
    std::vector<Transposition> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

}  // namespace hurwitz
