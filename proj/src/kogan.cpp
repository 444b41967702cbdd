#include "gtkk/kogan.hpp"

#include "gtkk/error.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace gtkk {

namespace {

void require_face_rank(int n) {
    if (n < 1) throw std::invalid_argument("face rank must be positive");
    if (n > kMaxFaceRank) throw GuardError("face enumeration is limited to n ≤ 11");
}

// Order in which a face's pairs are read into its word.
std::vector<IndexPair> reading_order(int n, FaceKind kind) {
    auto pairs = index_pairs(n);
    if (kind == FaceKind::SE)
        std::sort(pairs.begin(), pairs.end(), [](const IndexPair& a, const IndexPair& b) {
            return a.first != b.first ? a.first < b.first : a.second > b.second;
        });
    return pairs;
}

int letter(FaceKind kind, const IndexPair& ij) { return kind == FaceKind::NE ? ij.first - ij.second : ij.second; }

Word face_word(const FaceSpec& f) {
    std::vector<int> letters;
    for (const auto& ij : reading_order(f.rank(), f.kind()))
        if (f.mask() >> pair_position(ij.first, ij.second) & 1U) letters.push_back(letter(f.kind(), ij));
    return Word(f.rank(), std::move(letters));
}

Permutation conjugate_by_w0(const Permutation& u) {
    const auto w0 = longest_element(u.rank());
    return compose(compose(w0, u), w0);
}

// length(u⁻¹ v) == length(v) − length(u), i.e. some reduced word of v starts
// with a reduced word of u.
bool is_left_factor(const Permutation& u, const Permutation& v) {
    return length(compose(u.inverse(), v)) == length(v) - length(u);
}

// Depth-first search over subsets of `order`, appending letters on the right
// of `current` while the word stays reduced and `current` stays a left factor
// of `target`. Calls `emit(mask)` whenever current == target.
void search(const std::vector<IndexPair>& order, FaceKind kind, std::size_t pos, const Permutation& current,
            std::uint64_t mask, const Permutation& target, const std::function<void(std::uint64_t)>& emit) {
    if (pos == order.size()) {
        if (current == target) emit(mask);
        return;
    }
    search(order, kind, pos + 1, current, mask, target, emit);
    const int s = letter(kind, order[pos]);
    if (current.has_right_descent(s)) return;
    const Permutation next = current.times_simple(s);
    if (!is_left_factor(next, target)) return;
    search(order, kind, pos + 1, next, mask | std::uint64_t{1} << pair_position(order[pos].first, order[pos].second),
           target, emit);
}

std::vector<IndexPair> pairs_of_mask(int n, std::uint64_t mask) {
    std::vector<IndexPair> out;
    for (const auto& ij : index_pairs(n))
        if (mask >> pair_position(ij.first, ij.second) & 1U) out.push_back(ij);
    return out;
}

std::set<GTPattern> face_union(const Partition& mu, FaceKind kind, const Permutation& w) {
    if (w.rank() != mu.rank()) throw std::invalid_argument("permutation rank does not match shape");
    const auto faces = reduced_faces(mu.rank(), kind, w);
    std::set<GTPattern> out;
    for (const auto& p : enumerate(mu))
        for (const auto& f : faces)
            if (f.contains(p)) {
                out.insert(p);
                break;
            }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FaceSpec

FaceSpec::FaceSpec(int n, FaceKind kind, std::vector<IndexPair> pairs) : n_(n), kind_(kind), pairs_(std::move(pairs)) {
    require_face_rank(n);
    for (auto [i, j] : pairs_) {
        if (!(n >= i && i > j && j >= 1))
            throw std::invalid_argument("face pair (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") out of range");
        mask_ |= std::uint64_t{1} << pair_position(i, j);
    }
    pairs_ = pairs_of_mask(n, mask_);
}

FaceSpec FaceSpec::full(int n, FaceKind kind) { return FaceSpec(n, kind, index_pairs(n)); }

bool FaceSpec::contains(const GTPattern& p) const {
    if (p.size() != n_) throw std::invalid_argument("pattern size does not match face");
    const auto eq = kind_ == FaceKind::NE ? ne_equality_mask(p) : se_equality_mask(p);
    return (mask_ & ~eq) == 0;
}

Word sigma(const FaceSpec& f) {
    if (f.kind() != FaceKind::NE) throw std::invalid_argument("sigma is defined for NE (Kogan) faces");
    return face_word(f);
}

Word sigma_bar(const FaceSpec& f) {
    if (f.kind() != FaceKind::SE) throw std::invalid_argument("sigma_bar is defined for SE (dual Kogan) faces");
    return face_word(f);
}

Permutation varpi(const FaceSpec& f) { return conjugate_by_w0(evaluate(sigma(f))); }

Permutation varpi_bar(const FaceSpec& f) { return conjugate_by_w0(evaluate(sigma_bar(f))); }

bool is_reduced(const FaceSpec& f) { return is_reduced(face_word(f)); }

std::vector<FaceSpec> reduced_faces(int n, FaceKind kind, const Permutation& target) {
    require_face_rank(n);
    if (target.rank() != n) throw std::invalid_argument("target rank mismatch");
    // varpi = w0 σ w0, so search for σ = w0·target·w0.
    const auto sigma_target = conjugate_by_w0(target);
    std::vector<FaceSpec> out;
    search(reading_order(n, kind), kind, 0, identity(n), 0, sigma_target,
           [&](std::uint64_t mask) { out.emplace_back(n, kind, pairs_of_mask(n, mask)); });
    return out;
}

std::set<GTPattern> kogan_points(const Partition& mu, const Permutation& w) {
    return face_union(mu, FaceKind::NE, w);
}

std::set<GTPattern> dual_kogan_points(const Partition& mu, const Permutation& w) {
    return face_union(mu, FaceKind::SE, w);
}

// ---------------------------------------------------------------------------
// BiKogan faces

Permutation bikogan_varpi(const BiFace& b) {
    if (b.se_part.kind() != FaceKind::SE || b.ne_part.kind() != FaceKind::NE)
        throw std::invalid_argument("BiFace needs an SE part and an NE part");
    if (b.se_part.rank() != b.ne_part.rank()) throw std::invalid_argument("BiFace parts have different ranks");
    return compose(evaluate(sigma_bar(b.se_part)).inverse(), evaluate(sigma(b.ne_part)));
}

bool bikogan_is_reduced(const BiFace& b) {
    return static_cast<std::size_t>(length(bikogan_varpi(b))) == b.se_part.size() + b.ne_part.size();
}

std::vector<BiFace> reduced_bifaces(const Permutation& v) {
    const int n = v.rank();
    require_face_rank(n);
    const auto se_order = reading_order(n, FaceKind::SE);
    const auto ne_order = reading_order(n, FaceKind::NE);
    std::vector<BiFace> out;

    // Reduced SE parts are pruned by length only; σ̄⁻¹ must then be a left
    // factor of v before the NE part is searched from it.
    std::function<void(std::size_t, const Permutation&, std::uint64_t)> se_search =
        [&](std::size_t pos, const Permutation& sbar, std::uint64_t mask) {
            if (pos == se_order.size()) {
                const Permutation head = sbar.inverse();
                if (!is_left_factor(head, v)) return;
                FaceSpec se(n, FaceKind::SE, pairs_of_mask(n, mask));
                search(ne_order, FaceKind::NE, 0, head, 0, v, [&](std::uint64_t ne_mask) {
                    out.push_back({se, FaceSpec(n, FaceKind::NE, pairs_of_mask(n, ne_mask))});
                });
                return;
            }
            se_search(pos + 1, sbar, mask);
            const int s = letter(FaceKind::SE, se_order[pos]);
            if (sbar.has_right_descent(s)) return;
            const Permutation next = sbar.times_simple(s);
            if (length(next) > length(v)) return;
            se_search(pos + 1, next,
                      mask | std::uint64_t{1} << pair_position(se_order[pos].first, se_order[pos].second));
        };
    se_search(0, identity(n), 0);
    return out;
}

std::vector<TensorElement> bikogan_points(const Partition& lambda, const Partition& mu, const BiFace& b,
                                          std::uint64_t limit) {
    std::vector<TensorElement> out;
    for (auto& t : product_pairs(lambda, mu, limit))
        if (b.contains(t)) out.push_back(std::move(t));
    return out;
}

std::vector<TensorElement> bikogan_union_points(const Partition& lambda, const Partition& mu, const Permutation& v,
                                                const UnionOptions& options) {
    if (v.rank() != lambda.rank()) throw std::invalid_argument("permutation rank does not match shapes");
    const auto faces = reduced_bifaces(v);
    const auto left = enumerate(lambda);
    const auto right = enumerate(mu);
    if (!left.empty() && right.size() > options.limit / left.size())
        throw GuardError("pair set exceeds the configured limit");

    std::vector<std::uint64_t> se_masks, ne_masks;
    for (const auto& p : left) se_masks.push_back(se_equality_mask(p));
    for (const auto& q : right) ne_masks.push_back(ne_equality_mask(q));

    const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(left.size())));
    std::vector<std::vector<TensorElement>> partial(workers);
    auto work = [&](unsigned w) {
        for (std::size_t a = w; a < left.size(); a += workers)
            for (std::size_t b = 0; b < right.size(); ++b)
                for (const auto& f : faces)
                    if ((f.se_part.mask() & ~se_masks[a]) == 0 && (f.ne_part.mask() & ~ne_masks[b]) == 0) {
                        partial[w].push_back({left[a], right[b]});
                        break;
                    }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<TensorElement> out;
    for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<BiFace> find_bikogan_witness(const TensorElement& t, const Permutation& v) {
    for (auto& f : reduced_bifaces(v))
        if (f.contains(t)) return f;
    return std::nullopt;
}

}  // namespace gtkk
