#include "gtkk/perm.hpp"

#include "gtkk/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtkk {

namespace {

void require_rank(int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
}

void require_same_rank(const Permutation& u, const Permutation& v) {
    if (u.rank() != v.rank())
        throw std::invalid_argument("permutation rank mismatch: " + std::to_string(u.rank()) + " vs " +
                                    std::to_string(v.rank()));
}

void require_index(int n, int i) {
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("reflection index " + std::to_string(i) + " out of range for n=" +
                                    std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Word

Word::Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    require_rank(n);
    for (int i : letters_) require_index(n, i);
}

Word Word::concat(const Word& other) const {
    if (n_ != other.n_) throw std::invalid_argument("word rank mismatch");
    std::vector<int> all = letters_;
    all.insert(all.end(), other.letters_.begin(), other.letters_.end());
    return Word(n_, std::move(all));
}

Word Word::reversed() const {
    return Word(n_, std::vector<int>(letters_.rbegin(), letters_.rend()));
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = rank();
    require_rank(n);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : images_) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("one-line notation is not a bijection of {1.." + std::to_string(n) + "}");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    require_rank(n);
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::longest(int n) {
    require_rank(n);
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) im[static_cast<std::size_t>(k)] = n - k;
    return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::simple_reflection(int n, int i) {
    require_index(n, i);
    return identity(n).times_simple(i);
}

Permutation Permutation::from_prefix(int n, std::span<const int> prefix) {
    require_rank(n);
    if (static_cast<int>(prefix.size()) > n)
        throw std::invalid_argument("one-line notation longer than rank");
    std::vector<int> im(prefix.begin(), prefix.end());
    for (int k = static_cast<int>(im.size()) + 1; k <= n; ++k) im.push_back(k);
    // The prefix must itself permute {1..k}; otherwise padding would duplicate.
    const int k = static_cast<int>(prefix.size());
    for (int x : prefix)
        if (x < 1 || x > k)
            throw std::invalid_argument("one-line prefix is not a permutation of {1.." + std::to_string(k) + "}");
    return Permutation(std::move(im));
}

int Permutation::length() const {
    int inv = 0;
    const auto n = images_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (images_[a] > images_[b]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k)
        im[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
    return Permutation(std::move(im), Unchecked{});
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k)
        if (images_[k] != static_cast<int>(k) + 1) return false;
    return true;
}

Permutation Permutation::times_simple(int i) const {
    require_index(rank(), i);
    auto im = images_;
    std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(i)]);
    return Permutation(std::move(im), Unchecked{});
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < images_.size(); ++k) os << (k ? "," : "") << images_[k];
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

Permutation identity(int n) { return Permutation::identity(n); }
Permutation longest_element(int n) { return Permutation::longest(n); }

Permutation compose(const Permutation& u, const Permutation& v) {
    require_same_rank(u, v);
    std::vector<int> im(v.images_.size());
    for (std::size_t k = 0; k < im.size(); ++k) im[k] = u(v.images_[k]);
    return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation evaluate(const Word& word) {
    std::vector<int> im(static_cast<std::size_t>(word.rank()));
    std::iota(im.begin(), im.end(), 1);
    for (int i : word.letters()) std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(i)]);
    return Permutation(std::move(im));
}

int length(const Permutation& w) { return w.length(); }

bool is_reduced(const Word& word) {
    // Track the length incrementally: every letter must raise it.
    std::vector<int> im(static_cast<std::size_t>(word.rank()));
    std::iota(im.begin(), im.end(), 1);
    for (int i : word.letters()) {
        auto& a = im[static_cast<std::size_t>(i - 1)];
        auto& b = im[static_cast<std::size_t>(i)];
        if (a > b) return false;
        std::swap(a, b);
    }
    return true;
}

Word reduced_word(const Permutation& w) {
    // Peel off the leftmost right descent repeatedly; reversing the peeled
    // letters gives a reduced word.
    auto im = w.images();
    std::vector<int> peeled;
    const int n = w.rank();
    for (;;) {
        int found = 0;
        for (int i = 1; i < n; ++i) {
            if (im[static_cast<std::size_t>(i - 1)] > im[static_cast<std::size_t>(i)]) {
                found = i;
                break;
            }
        }
        if (!found) break;
        std::swap(im[static_cast<std::size_t>(found - 1)], im[static_cast<std::size_t>(found)]);
        peeled.push_back(found);
    }
    std::reverse(peeled.begin(), peeled.end());
    return Word(n, std::move(peeled));
}

namespace {

void collect_reduced_words(const Permutation& w, std::vector<int>& suffix, std::vector<Word>& out) {
    if (w.is_identity()) {
        out.emplace_back(w.rank(), std::vector<int>(suffix.rbegin(), suffix.rend()));
        return;
    }
    for (int i = 1; i < w.rank(); ++i) {
        if (!w.has_right_descent(i)) continue;
        suffix.push_back(i);
        collect_reduced_words(w.times_simple(i), suffix, out);
        suffix.pop_back();
    }
}

}  // namespace

std::vector<Word> all_reduced_words(const Permutation& w) {
    std::vector<Word> out;
    std::vector<int> suffix;
    collect_reduced_words(w, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    require_same_rank(u, v);
    const int n = u.rank();
    // r_u(i, j) = #{k ≤ i : u(k) ≥ j}; u ≤ v iff r_u ≤ r_v entrywise.
    std::vector<int> ru(static_cast<std::size_t>(n) + 2, 0), rv(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= u(i); ++j) ++ru[static_cast<std::size_t>(j)];
        for (int j = 1; j <= v(i); ++j) ++rv[static_cast<std::size_t>(j)];
        for (int j = 1; j <= n; ++j)
            if (ru[static_cast<std::size_t>(j)] > rv[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

Permutation star(const Permutation& u, int i) {
    require_index(u.rank(), i);
    return u.has_right_descent(i) ? u : u.times_simple(i);
}

Permutation demazure_product(const Word& word) {
    std::vector<int> im(static_cast<std::size_t>(word.rank()));
    std::iota(im.begin(), im.end(), 1);
    for (int i : word.letters()) {
        auto& a = im[static_cast<std::size_t>(i - 1)];
        auto& b = im[static_cast<std::size_t>(i)];
        if (a < b) std::swap(a, b);
    }
    return Permutation(std::move(im));
}

Permutation star_product(const Permutation& u, const Permutation& v) {
    require_same_rank(u, v);
    return demazure_product(reduced_word(u).concat(reduced_word(v)));
}

bool subword_dominates(const Word& word, const Permutation& u) {
    if (word.rank() != u.rank()) throw std::invalid_argument("rank mismatch");
    return bruhat_leq(u, demazure_product(word));
}

ParabolicSet stabilizer_generators(std::span<const std::int64_t> mu) {
    ParabolicSet J;
    J.n = static_cast<int>(mu.size());
    require_rank(J.n);
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] == mu[i + 1]) J.generators.insert(static_cast<int>(i) + 1);
    return J;
}

Permutation parabolic_longest(const ParabolicSet& J) {
    // W_J is a product of symmetric groups on maximal runs of consecutive
    // generators; its longest element reverses each run's block.
    std::vector<int> im(static_cast<std::size_t>(J.n));
    std::iota(im.begin(), im.end(), 1);
    int start = 1;
    while (start <= J.n) {
        int end = start;
        while (end < J.n && J.contains(end)) ++end;
        std::reverse(im.begin() + (start - 1), im.begin() + end);
        start = end + 1;
    }
    return Permutation(std::move(im));
}

Permutation min_coset_rep(const Permutation& w, const ParabolicSet& J) {
    if (w.rank() != J.n) throw std::invalid_argument("rank mismatch");
    for (int i : J.generators) require_index(J.n, i);
    // Descend along right descents in J until none remain.
    Permutation u = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i : J.generators) {
            if (u.has_right_descent(i)) {
                u = u.times_simple(i);
                moved = true;
            }
        }
    }
    return u;
}

Permutation max_coset_rep(const Permutation& w, const ParabolicSet& J) {
    return compose(min_coset_rep(w, J), parabolic_longest(J));
}

Permutation kk_direction_formula(const Permutation& tau_hat, const Permutation& phi_tilde) {
    require_same_rank(tau_hat, phi_tilde);
    const int n = tau_hat.rank();
    const Permutation w0 = longest_element(n);
    const Word word = reduced_word(tau_hat.inverse()).concat(reduced_word(compose(phi_tilde, w0)));
    return compose(demazure_product(word), w0);
}

std::vector<Permutation> all_permutations(int n) {
    require_rank(n);
    if (n > kMaxGroupEnumerationRank)
        throw GuardError("refusing to enumerate S_" + std::to_string(n));
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> bruhat_interval(const Permutation& w) {
    std::vector<Permutation> out;
    for (auto& u : all_permutations(w.rank()))
        if (bruhat_leq(u, w)) out.push_back(std::move(u));
    return out;
}

}  // namespace gtkk
