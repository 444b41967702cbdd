#include "gtkk/crystal.hpp"

#include "gtkk/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace gtkk {

namespace {

void require_index(const GTPattern& p, int i) {
    if (i < 1 || i > p.size() - 1)
        throw std::invalid_argument("crystal operator index " + std::to_string(i) + " out of range for n=" +
                                    std::to_string(p.size()));
}

// a_{k,t} with the boundary conventions of the d_t recursion.
Entry entry_or_zero(const GTPattern& p, int k, int t) {
    if (k < 1 || t > k) return 0;
    return p.at(k, t);
}

}  // namespace

std::vector<Entry> d_values(const GTPattern& p, int i) {
    require_index(p, i);
    std::vector<Entry> d(static_cast<std::size_t>(i) + 1);
    d[0] = p.at(i, 1) - p.at(i + 1, 1);
    for (int t = 2; t <= i + 1; ++t) {
        d[static_cast<std::size_t>(t - 1)] = d[static_cast<std::size_t>(t - 2)] + entry_or_zero(p, i, t - 1) +
                                             entry_or_zero(p, i, t) - entry_or_zero(p, i - 1, t - 1) -
                                             entry_or_zero(p, i + 1, t);
    }
    return d;
}

std::optional<GTPattern> raise(const GTPattern& p, int i) {
    const auto d = d_values(p, i);
    const auto first_min = std::min_element(d.begin(), d.end());
    if (*first_min == 0) return std::nullopt;
    const int m = static_cast<int>(first_min - d.begin()) + 1;
    GTPattern q = p;
    q.set(i, m, p.at(i, m) + 1);
    return q;
}

std::optional<GTPattern> lower(const GTPattern& p, int i) {
    const auto d = d_values(p, i);
    // Last position attaining the minimum.
    const auto last_min = std::min_element(d.rbegin(), d.rend());
    const int big_m = static_cast<int>(d.rend() - last_min);
    if (big_m == i + 1) return std::nullopt;
    GTPattern q = p;
    q.set(i, big_m, p.at(i, big_m) - 1);
    return q;
}

Entry epsilon(const GTPattern& p, int i) {
    const auto d = d_values(p, i);
    return -*std::min_element(d.begin(), d.end());
}

Entry phi(const GTPattern& p, int i) { return epsilon(p, i) + coroot_pairing(weight(p), i); }

Entry epsilon_by_walk(const GTPattern& p, int i) {
    Entry count = 0;
    for (auto q = raise(p, i); q; q = raise(*q, i)) ++count;
    return count;
}

Entry phi_by_walk(const GTPattern& p, int i) {
    Entry count = 0;
    for (auto q = lower(p, i); q; q = lower(*q, i)) ++count;
    return count;
}

Weight weight(const TensorElement& t) { return weight(t.left) + weight(t.right); }

std::optional<TensorElement> tensor_lower(const TensorElement& t, int i, TensorConvention conv) {
    const bool standard = conv == TensorConvention::Standard;
    const GTPattern& first = standard ? t.left : t.right;
    const GTPattern& second = standard ? t.right : t.left;
    const bool on_first = phi(first, i) > epsilon(second, i);
    auto moved = lower(on_first ? first : second, i);
    if (!moved) return std::nullopt;
    TensorElement r = t;
    ((on_first == standard) ? r.left : r.right) = std::move(*moved);
    return r;
}

std::optional<TensorElement> tensor_raise(const TensorElement& t, int i, TensorConvention conv) {
    const bool standard = conv == TensorConvention::Standard;
    const GTPattern& first = standard ? t.left : t.right;
    const GTPattern& second = standard ? t.right : t.left;
    const bool on_second = epsilon(second, i) > phi(first, i);
    auto moved = raise(on_second ? second : first, i);
    if (!moved) return std::nullopt;
    TensorElement r = t;
    ((on_second != standard) ? r.left : r.right) = std::move(*moved);
    return r;
}

namespace {

template <typename Step>
std::set<GTPattern> saturate(GTPattern start, const Word& word, Step step) {
    std::set<GTPattern> current{std::move(start)};
    const auto& letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        std::set<GTPattern> next = current;
        for (const auto& p : current)
            for (auto q = step(p, *it); q; q = step(*q, *it)) next.insert(*q);
        current = std::move(next);
    }
    return current;
}

void require_reduced(const Partition& mu, const Word& word) {
    if (word.rank() != mu.rank()) throw std::invalid_argument("word rank does not match shape");
    if (!is_reduced(word)) throw std::invalid_argument("Demazure crystals require a reduced word");
}

}  // namespace

std::set<GTPattern> demazure_crystal(const Partition& mu, const Word& word) {
    require_reduced(mu, word);
    return saturate(highest_pattern(mu), word, [](const GTPattern& p, int i) { return lower(p, i); });
}

std::set<GTPattern> demazure_crystal(const Partition& mu, const Permutation& w) {
    return demazure_crystal(mu, reduced_word(w));
}

std::set<GTPattern> opposite_demazure_crystal(const Partition& mu, const Word& word) {
    require_reduced(mu, word);
    return saturate(lowest_pattern(mu), word, [](const GTPattern& p, int i) { return raise(p, i); });
}

std::set<GTPattern> opposite_demazure_crystal(const Partition& mu, const Permutation& w) {
    return opposite_demazure_crystal(mu, reduced_word(compose(w, longest_element(w.rank()))));
}

// ---------------------------------------------------------------------------
// DemazureAtlas

DemazureAtlas::DemazureAtlas(const Partition& mu) : mu_(mu), group_(all_permutations(mu.rank())) {
    for (const auto& w : group_) {
        demazure_.emplace(w, demazure_crystal(mu, w));
        opposite_.emplace(w, opposite_demazure_crystal(mu, w));
    }
}

namespace {

std::optional<Permutation> unique_extreme(const std::vector<Permutation>& candidates, bool minimum) {
    for (const auto& c : candidates) {
        const bool extreme = std::all_of(candidates.begin(), candidates.end(), [&](const Permutation& o) {
            return minimum ? bruhat_leq(c, o) : bruhat_leq(o, c);
        });
        if (extreme) return c;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Permutation> DemazureAtlas::min_demazure_index(const GTPattern& p) const {
    std::vector<Permutation> hits;
    for (const auto& w : group_)
        if (demazure_.at(w).count(p)) hits.push_back(w);
    return unique_extreme(hits, true);
}

std::optional<Permutation> DemazureAtlas::max_opposite_index(const GTPattern& p) const {
    std::vector<Permutation> hits;
    for (const auto& w : group_)
        if (opposite_.at(w).count(p)) hits.push_back(w);
    return unique_extreme(hits, false);
}

// ---------------------------------------------------------------------------
// Components

std::vector<TensorElement> product_pairs(const Partition& lambda, const Partition& mu, std::uint64_t limit) {
    if (lambda.rank() != mu.rank()) throw std::invalid_argument("shapes have different lengths");
    const auto dl = dimension_oracle(lambda);
    const auto dm = dimension_oracle(mu);
    if (dl != 0 && dm > limit / dl)
        throw GuardError("pair set of size " + std::to_string(dl) + "×" + std::to_string(dm) +
                         " exceeds the limit of " + std::to_string(limit));
    const auto left = enumerate(lambda);
    const auto right = enumerate(mu);
    std::vector<TensorElement> out;
    out.reserve(left.size() * right.size());
    for (const auto& p : left)
        for (const auto& q : right) out.push_back({p, q});
    return out;
}

std::vector<Component> components(const Partition& lambda, const Partition& mu, TensorConvention conv,
                                  std::uint64_t limit) {
    const auto pairs = product_pairs(lambda, mu, limit);
    const int n = lambda.rank();
    auto index_of = [&](const TensorElement& t) {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), t);
        if (it == pairs.end() || *it != t) throw ConsistencyError("tensor operator left the pair set");
        return static_cast<std::size_t>(it - pairs.begin());
    };

    std::vector<std::size_t> parent(pairs.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        for (int i = 1; i < n; ++i) {
            if (auto t = tensor_lower(pairs[k], i, conv)) {
                const auto a = find(k), b = find(index_of(*t));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < pairs.size(); ++k) groups[find(k)].push_back(k);

    std::vector<Component> out;
    for (const auto& [root, idx] : groups) {
        Component c;
        std::vector<TensorElement> tops;
        for (auto k : idx) {
            c.members.push_back(pairs[k]);
            bool top = true;
            for (int i = 1; i < n && top; ++i) top = !tensor_raise(pairs[k], i, conv).has_value();
            if (top) tops.push_back(pairs[k]);
        }
        if (tops.size() != 1)
            throw ConsistencyError("component has " + std::to_string(tops.size()) + " highest-weight elements");
        c.highest = tops.front();
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CrystalEdge> crystal_edges(const std::vector<GTPattern>& patterns) {
    std::vector<CrystalEdge> edges;
    if (patterns.empty()) return edges;
    const int n = patterns.front().size();
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        for (int i = 1; i < n; ++i) {
            auto q = lower(patterns[k], i);
            if (!q) continue;
            auto it = std::lower_bound(patterns.begin(), patterns.end(), *q);
            if (it == patterns.end() || *it != *q) throw ConsistencyError("lowering left the pattern set");
            edges.push_back({k, static_cast<std::size_t>(it - patterns.begin()), i});
        }
    }
    return edges;
}

}  // namespace gtkk
