#pragma once

// Semistandard tableaux as an independent model of the same crystal.
//
// Row i of a GT pattern is the shape of the subtableau with entries ≤ i, so
// tableau row j contains a_{ij} − a_{i−1,j} copies of the letter i.
// Crystal operators use the signature rule on the row reading word (rows
// bottom to top, each left to right): an i+1 followed later by an i cancel,
// f_i turns the rightmost uncancelled i into i+1 and e_i turns the leftmost
// uncancelled i+1 into i.

#include "gtkk/gt.hpp"

#include <optional>
#include <vector>

namespace gtkk {

struct Tableau {
    std::vector<std::vector<int>> rows;  // rows[0] is the top (longest) row

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

Tableau gt_to_tableau(const GTPattern& p);
/// Inverse of gt_to_tableau for tableaux with entries in {1..n}.
GTPattern tableau_to_gt(const Tableau& t, int n);

/// Row reading word (bottom row first).
std::vector<int> reading_word(const Tableau& t);

std::optional<GTPattern> raise_oracle(const GTPattern& p, int i);
std::optional<GTPattern> lower_oracle(const GTPattern& p, int i);

}  // namespace gtkk
