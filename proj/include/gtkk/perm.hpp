#pragma once

// Symmetric group engine for S_n.
//
// Conventions used throughout the library:
//   * everything is 1-based: permutations act on {1..n}, simple reflections
//     are s_1..s_{n-1};
//   * compose(u, v) = u∘v, i.e. v is applied first;
//   * a word [i1,...,ik] evaluates to s_i1 ∘ s_i2 ∘ ... ∘ s_ik, so right
//     multiplication u·s_i swaps the one-line entries in positions i, i+1.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gtkk {

/// Sequence of simple-reflection indices, each in {1..n-1}.
class Word {
public:
    Word() = default;
    Word(int n, std::vector<int> letters);
    Word(int n, std::initializer_list<int> letters) : Word(n, std::vector<int>(letters)) {}

    int rank() const { return n_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word concat(const Word& other) const;
    Word reversed() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int n_ = 1;
    std::vector<int> letters_;
};

/// Element of S_n in one-line notation.
class Permutation {
public:
    Permutation() : Permutation(identity(1)) {}
    /// Throws std::invalid_argument unless `images` is a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation longest(int n);
    static Permutation simple_reflection(int n, int i);
    /// One-line prefix padded with fixed points (S_k embedded in S_n).
    static Permutation from_prefix(int n, std::span<const int> prefix);

    int rank() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
    const std::vector<int>& images() const { return images_; }

    int length() const;
    Permutation inverse() const;
    bool is_identity() const;
    /// Descent at i: u(i) > u(i+1), equivalently length(u·s_i) < length(u).
    bool has_right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
    /// u·s_i.
    Permutation times_simple(int i) const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
    friend Permutation compose(const Permutation&, const Permutation&);

    std::vector<int> images_;
};

/// Set of generator indices of a parabolic subgroup W_J.
struct ParabolicSet {
    int n = 1;
    std::set<int> generators;

    bool contains(int i) const { return generators.count(i) != 0; }
    friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;
};

Permutation identity(int n);
Permutation longest_element(int n);

/// u∘v (v first). Throws std::invalid_argument on rank mismatch.
Permutation compose(const Permutation& u, const Permutation& v);

Permutation evaluate(const Word& word);
int length(const Permutation& w);
bool is_reduced(const Word& word);

/// Lexicographically smallest reduced word.
Word reduced_word(const Permutation& w);

/// Every reduced word of w, in lexicographic order.
std::vector<Word> all_reduced_words(const Permutation& w);

/// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// max{u, u·s_i} in Bruhat order.
Permutation star(const Permutation& u, int i);

/// Left fold of star over the letters (0-Hecke evaluation of the word).
Permutation demazure_product(const Word& word);

/// u ∗ v, computed as the Demazure product of reduced(u) ++ reduced(v).
Permutation star_product(const Permutation& u, const Permutation& v);

/// True iff u ≤ demazure_product(word); with u = w0 this decides whether the
/// word contains a reduced word of w0 as a subword.
bool subword_dominates(const Word& word, const Permutation& u);

/// {i : μ_i = μ_{i+1}} for a weakly decreasing sequence.
ParabolicSet stabilizer_generators(std::span<const std::int64_t> mu);

/// Longest element of the parabolic subgroup W_J.
Permutation parabolic_longest(const ParabolicSet& J);

Permutation min_coset_rep(const Permutation& w, const ParabolicSet& J);
Permutation max_coset_rep(const Permutation& w, const ParabolicSet& J);

/// (τ̂⁻¹ ∗ φ̃w0)·w0, the permutation attached to a concatenated pair of
/// paths with maximal final direction τ̂ and minimal initial direction φ̃.
Permutation kk_direction_formula(const Permutation& tau_hat, const Permutation& phi_tilde);

/// All of S_n in lexicographic one-line order. Guarded to n ≤ 9.
std::vector<Permutation> all_permutations(int n);

/// {u : u ≤ w}, sorted. Guarded to n ≤ 9.
std::vector<Permutation> bruhat_interval(const Permutation& w);

inline constexpr int kMaxGroupEnumerationRank = 9;

}  // namespace gtkk
