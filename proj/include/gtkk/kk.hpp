#pragma once

// Kostant-Kumar crystals GTZ(λ, w, μ) = {(P, Q) : p(P, Q) ≤ w}.

#include "gtkk/charpoly.hpp"
#include "gtkk/crystal.hpp"
#include "gtkk/gt.hpp"
#include "gtkk/perm.hpp"

#include <map>
#include <vector>

namespace gtkk {

struct KKOptions {
    unsigned threads = 1;
    std::uint64_t limit = kDefaultPairLimit;
};

struct KKCrystal {
    Partition lambda;
    Partition mu;
    Permutation w;
    std::vector<TensorElement> members;  // sorted
};

bool member(const Partition& lambda, const Partition& mu, const Permutation& w, const GTPattern& p,
            const GTPattern& q);

KKCrystal kk_crystal(const Partition& lambda, const Partition& mu, const Permutation& w, const KKOptions& options = {});

CharPoly kk_character(const Partition& lambda, const Partition& mu, const Permutation& w,
                      const KKOptions& options = {});

/// Pairs whose reading word contains a reduced word of w0 as a subword.
std::vector<TensorElement> cartan_component(const Partition& lambda, const Partition& mu,
                                            const KKOptions& options = {});

/// Highest weights of the components making up GTZ(λ, w, μ), with
/// multiplicities. Throws ConsistencyError if a component straddles the set.
std::map<Weight, std::int64_t> decompose(const Partition& lambda, const Partition& mu, const Permutation& w,
                                         const KKOptions& options = {});

/// Same, reusing precomputed components.
std::map<Weight, std::int64_t> decompose(const std::vector<Component>& comps, const KKCrystal& kk);

}  // namespace gtkk
