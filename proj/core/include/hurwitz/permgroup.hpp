#pragma once

// Symmetric group arithmetic on {1..n}. Products read right to left:
// compose(a, b) applies b first, then a.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

struct Transposition {
    int i = 1;
    int j = 2;

    Transposition() = default;
    /// Stores the pair with i < j. Throws std::invalid_argument when a == b or a < 1.
    Transposition(int a, int b);

    auto operator<=>(const Transposition&) const = default;
};

class CycleType {
public:
    CycleType() = default;
    /// Parts are sorted on construction. Throws on non-positive parts.
    explicit CycleType(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // n = sum of parts
    int length() const { return static_cast<int>(parts_.size()); }  // s

    /// Number of permutations of the parts preserving them, i.e. prod over distinct values of mult!.
    std::uint64_t aut_count() const;
    /// Number of permutations of S_n with this cycle type.
    std::uint64_t class_size() const;

    std::string to_string() const;  // "2,1" style, nondecreasing
    auto operator<=>(const CycleType&) const = default;

private:
    std::vector<int> parts_;
};

/// Parses "2,1,1" (any order) into a cycle type.
CycleType parse_cycle_type(std::string_view text);

/// All partitions of n as cycle types.
std::vector<CycleType> partitions_of(int n);

class Permutation {
public:
    Permutation() = default;
    /// Identity on {1..n}.
    explicit Permutation(int n);
    /// images[i-1] is the image of i. Throws std::invalid_argument if not a bijection of {1..n}.
    static Permutation from_images(std::vector<int> images);
    static Permutation from_transposition(int n, Transposition t);
    /// Parses cycle notation such as "(1 2 3)(4 5)"; "()" or "" is the identity.
    static Permutation parse(int n, std::string_view text);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    /// Fixed points are included as 1-cycles.
    std::vector<std::vector<int>> cycles() const;
    /// Cycle notation without fixed points; the identity prints as "()".
    std::string to_string() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Apply b first, then a. Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// Right-to-left product t_m ... t_1 of the transpositions, as in a factorization.
Permutation product_right_to_left(int n, std::span<const Transposition> ts);

CycleType cycle_type(const Permutation& p);
bool is_n_cycle(const Permutation& p);

/// All transpositions of S_n in lexicographic (i, j) order.
std::vector<Transposition> all_transpositions(int n);

}  // namespace hurwitz
