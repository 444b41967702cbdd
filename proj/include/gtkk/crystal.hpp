#pragma once

// Kashiwara crystal structure on integral GT patterns and on pairs of them.
//
// A std::nullopt result plays the role of the absorbing element 0.

#include "gtkk/gt.hpp"
#include "gtkk/perm.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gtkk {

/// d_1..d_{i+1} for operator index i. Missing entries a_{k,k+1} and the
/// nonexistent row 0 read as 0.
std::vector<Entry> d_values(const GTPattern& p, int i);

/// e_i. Increments a_{i,m} at the first minimum of d_t, or returns nullopt
/// when that minimum is 0.
std::optional<GTPattern> raise(const GTPattern& p, int i);

/// f_i. Decrements a_{i,M} at the last minimum of d_t, or returns nullopt when
/// the last minimum is at t = i+1.
std::optional<GTPattern> lower(const GTPattern& p, int i);

/// Number of successful raise (resp. lower) applications. Uses the closed
/// forms ε_i = −min d_t and φ_i = ε_i + ⟨wt, α_i^∨⟩.
Entry epsilon(const GTPattern& p, int i);
Entry phi(const GTPattern& p, int i);

/// Same quantities by walking the i-string.
Entry epsilon_by_walk(const GTPattern& p, int i);
Entry phi_by_walk(const GTPattern& p, int i);

/// Element of GTZ(λ) × GTZ(μ).
struct TensorElement {
    GTPattern left;
    GTPattern right;

    friend bool operator==(const TensorElement&, const TensorElement&) = default;
    friend auto operator<=>(const TensorElement&, const TensorElement&) = default;
};

Weight weight(const TensorElement& t);

enum class TensorConvention {
    /// f_i acts on the left factor iff φ_i(left) > ε_i(right);
    /// e_i acts on the right factor iff ε_i(right) > φ_i(left).
    Standard,
    /// Factors swapped. Only used as a negative control.
    Mirrored,
};

std::optional<TensorElement> tensor_raise(const TensorElement& t, int i,
                                          TensorConvention conv = TensorConvention::Standard);
std::optional<TensorElement> tensor_lower(const TensorElement& t, int i,
                                          TensorConvention conv = TensorConvention::Standard);

/// Closure {f_{i1}^{m1} … f_{ik}^{mk} G⁰_μ}. `word` must be reduced.
std::set<GTPattern> demazure_crystal(const Partition& mu, const Word& word);
std::set<GTPattern> demazure_crystal(const Partition& mu, const Permutation& w);

/// Closure {e_{j1}^{m1} … e_{jt}^{mt} G*_μ}; `word` is a reduced word of w·w0.
std::set<GTPattern> opposite_demazure_crystal(const Partition& mu, const Word& word);
/// Opposite Demazure crystal indexed by w (a reduced word of w·w0 is chosen).
std::set<GTPattern> opposite_demazure_crystal(const Partition& mu, const Permutation& w);

/// Every Demazure and opposite Demazure crystal of one shape, indexed by S_n.
class DemazureAtlas {
public:
    explicit DemazureAtlas(const Partition& mu);

    const Partition& shape() const { return mu_; }
    const std::set<GTPattern>& demazure(const Permutation& w) const { return demazure_.at(w); }
    const std::set<GTPattern>& opposite(const Permutation& w) const { return opposite_.at(w); }

    /// Unique Bruhat-minimum of {w : P ∈ D(μ, w)}, or nullopt if none exists.
    std::optional<Permutation> min_demazure_index(const GTPattern& p) const;
    /// Unique Bruhat-maximum of {w : P ∈ D(μ, w)^op}, or nullopt if none exists.
    std::optional<Permutation> max_opposite_index(const GTPattern& p) const;

private:
    Partition mu_;
    std::vector<Permutation> group_;
    std::map<Permutation, std::set<GTPattern>> demazure_;
    std::map<Permutation, std::set<GTPattern>> opposite_;
};

/// Connected component of the tensor crystal graph.
struct Component {
    std::vector<TensorElement> members;  // sorted
    TensorElement highest;

    Weight highest_weight() const { return weight(highest); }
};

inline constexpr std::uint64_t kDefaultPairLimit = 10'000'000;

/// Full pair set GTZ(λ) × GTZ(μ), lexicographic. Throws GuardError above `limit`.
std::vector<TensorElement> product_pairs(const Partition& lambda, const Partition& mu,
                                         std::uint64_t limit = kDefaultPairLimit);

/// Components of GTZ(λ) × GTZ(μ), ordered by their smallest member.
/// Throws ConsistencyError if a component lacks a unique highest element.
std::vector<Component> components(const Partition& lambda, const Partition& mu,
                                  TensorConvention conv = TensorConvention::Standard,
                                  std::uint64_t limit = kDefaultPairLimit);

/// Labeled edge P --f_i--> Q of a single crystal, by pattern index.
struct CrystalEdge {
    std::size_t from;
    std::size_t to;
    int label;
};

/// f_i edges over enumerate(μ), indices into that enumeration.
std::vector<CrystalEdge> crystal_edges(const std::vector<GTPattern>& patterns);

}  // namespace gtkk
