#pragma once

#include "gtkk/gt.hpp"
#include "gtkk/perm.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace gtkk {

/// Formal character: finitely supported map Weight → nonzero integer.
/// Weights may have negative coordinates (divided-difference intermediates).
class CharPoly {
public:
    explicit CharPoly(int n = 1) : n_(n) {}

    static CharPoly monomial(const Weight& w, std::int64_t coeff = 1);
    static CharPoly one(int n) { return monomial(Weight{std::vector<Entry>(static_cast<std::size_t>(n), 0)}); }

    int rank() const { return n_; }
    const std::map<Weight, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::int64_t coefficient(const Weight& w) const;
    /// Sum of all coefficients (the dimension when all are positive).
    std::int64_t total() const;

    /// Adds c·x^w, dropping the term if it cancels.
    void add_term(const Weight& w, std::int64_t c);

    CharPoly& operator+=(const CharPoly& other);
    CharPoly operator-() const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    int n_;
    std::map<Weight, std::int64_t> terms_;
};

CharPoly operator+(CharPoly a, const CharPoly& b);
CharPoly operator-(CharPoly a, const CharPoly& b);
CharPoly operator*(const CharPoly& a, const CharPoly& b);
/// Scalar multiple.
CharPoly operator*(std::int64_t c, const CharPoly& a);

/// Σ x^{wt(P)} over the given patterns.
CharPoly character_of(std::span<const GTPattern> patterns);

/// Schur polynomial via GT enumeration.
CharPoly schur(const Partition& mu);

/// Schur polynomial via the Demazure operator chain for a reduced word of w0.
/// Independent of schur(); the two are compared in tests.
CharPoly schur_via_demazure(const Partition& mu);

/// Isobaric divided difference π_i f = (x_i f − x_{i+1} s_i f)/(x_i − x_{i+1}).
CharPoly demazure_operator(int i, const CharPoly& f);

/// π_{i1} ∘ … ∘ π_{ik} applied to x^μ (π_{ik} first). The word must be
/// reduced; throws std::invalid_argument otherwise.
CharPoly demazure_character(const Partition& mu, const Word& word);

/// Swaps coordinates i and i+1 of every weight.
CharPoly reflect(int i, const CharPoly& f);

}  // namespace gtkk
