#pragma once

// Reading words of GT patterns and the permutation attached to a pair.
//
// None of these require interlacing: any triangular array is accepted, and
// only equalities between entries are inspected. Rational arrays can be
// read after clearing denominators, since scaling preserves equalities.

#include "gtkk/gt.hpp"
#include "gtkk/perm.hpp"

namespace gtkk {

/// s_j for every SE equality a_{i−1,j} = a_{i,j+1}, ordered by i descending
/// then j ascending.
Word f_word(const GTPattern& p);

/// s_{i−j} for every NE equality a_{ij} = a_{i−1,j}, ordered lexicographically.
Word i_word(const GTPattern& q);

/// f_word(P) ++ i_word(Q).
Word pair_word(const GTPattern& p, const GTPattern& q);

/// demazure_product(pair_word(P, Q)) · w0.
Permutation associated_permutation(const GTPattern& p, const GTPattern& q);

struct ReadingSummary {
    Word f_word;
    Word i_word;
    Word pair_word;
    Permutation demazure_product;
    Permutation p;
};

ReadingSummary read_pair(const GTPattern& p, const GTPattern& q);

}  // namespace gtkk
