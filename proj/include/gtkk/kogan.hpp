#pragma once

// Kogan, dual Kogan and BiKogan faces, represented by their equality sets.

#include "gtkk/crystal.hpp"
#include "gtkk/gt.hpp"
#include "gtkk/perm.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace gtkk {

/// NE faces set a_{ij} = a_{i−1,j}; SE faces set a_{i−1,j} = a_{i,j+1}.
enum class FaceKind { NE, SE };

class FaceSpec {
public:
    FaceSpec(int n, FaceKind kind, std::vector<IndexPair> pairs = {});
    static FaceSpec full(int n, FaceKind kind);

    int rank() const { return n_; }
    FaceKind kind() const { return kind_; }
    /// Lexicographically sorted, duplicates removed.
    const std::vector<IndexPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    std::uint64_t mask() const { return mask_; }

    /// True iff every selected equality holds on `p`.
    bool contains(const GTPattern& p) const;

    friend bool operator==(const FaceSpec&, const FaceSpec&) = default;

private:
    int n_;
    FaceKind kind_;
    std::vector<IndexPair> pairs_;
    std::uint64_t mask_ = 0;
};

/// NE face word: s_{i−j} over pairs in lexicographic order.
Word sigma(const FaceSpec& f);
/// SE face word: s_j over pairs ordered by i ascending, then j descending.
Word sigma_bar(const FaceSpec& f);

/// w0·σ(F)·w0 for NE faces.
Permutation varpi(const FaceSpec& f);
/// w0·σ̄(F)·w0 for SE faces.
Permutation varpi_bar(const FaceSpec& f);
/// Whether the face's word (σ or σ̄ according to its kind) is reduced.
bool is_reduced(const FaceSpec& f);

/// All reduced faces of one kind whose associated permutation (varpi or
/// varpi_bar) equals `target`, found by pruned depth-first search.
std::vector<FaceSpec> reduced_faces(int n, FaceKind kind, const Permutation& target);

/// Union of integral points of reduced NE faces with varpi(F) = w.
std::set<GTPattern> kogan_points(const Partition& mu, const Permutation& w);
/// Union of integral points of reduced SE faces with varpi_bar(F) = w.
std::set<GTPattern> dual_kogan_points(const Partition& mu, const Permutation& w);

/// SE equalities on the λ-factor together with NE equalities on the μ-factor.
struct BiFace {
    FaceSpec se_part;
    FaceSpec ne_part;

    bool contains(const TensorElement& t) const { return se_part.contains(t.left) && ne_part.contains(t.right); }
    friend bool operator==(const BiFace&, const BiFace&) = default;
};

/// σ̄(F)⁻¹ · σ(F′).
Permutation bikogan_varpi(const BiFace& b);
/// length(bikogan_varpi) = |F| + |F′|.
bool bikogan_is_reduced(const BiFace& b);

/// Every reduced BiFace with bikogan_varpi = v.
std::vector<BiFace> reduced_bifaces(const Permutation& v);

inline constexpr int kMaxFaceRank = 11;

/// Pairs of GTZ(λ) × GTZ(μ) lying on the face, sorted.
std::vector<TensorElement> bikogan_points(const Partition& lambda, const Partition& mu, const BiFace& b,
                                          std::uint64_t limit = kDefaultPairLimit);

struct UnionOptions {
    unsigned threads = 1;
    std::uint64_t limit = kDefaultPairLimit;
};

/// Union of bikogan_points over all reduced BiFaces with varpi = v, sorted.
std::vector<TensorElement> bikogan_union_points(const Partition& lambda, const Partition& mu, const Permutation& v,
                                                const UnionOptions& options = {});

/// A reduced BiFace with varpi = v containing (P, Q), if any.
std::optional<BiFace> find_bikogan_witness(const TensorElement& t, const Permutation& v);

}  // namespace gtkk
