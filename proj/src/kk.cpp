#include "gtkk/kk.hpp"

#include "gtkk/error.hpp"
#include "gtkk/reading.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace gtkk {

namespace {

void require_shapes(const Partition& lambda, const Partition& mu, const Permutation& w) {
    if (lambda.rank() != mu.rank() || w.rank() != mu.rank())
        throw std::invalid_argument("λ, μ and w must have the same rank");
}

// Keeps the pairs satisfying `keep`, splitting the left factor round-robin
// across workers. Output is sorted, so it does not depend on the thread count.
std::vector<TensorElement> filter_pairs(const Partition& lambda, const Partition& mu, const KKOptions& options,
                                        const std::function<bool(const GTPattern&, const GTPattern&)>& keep) {
    const auto dl = dimension_oracle(lambda);
    const auto dm = dimension_oracle(mu);
    if (dl != 0 && dm > options.limit / dl)
        throw GuardError("pair set of size " + std::to_string(dl) + "×" + std::to_string(dm) +
                         " exceeds the limit of " + std::to_string(options.limit) + " (use --force)");
    const auto left = enumerate(lambda);
    const auto right = enumerate(mu);
    const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(left.size())));
    std::vector<std::vector<TensorElement>> partial(workers);
    auto work = [&](unsigned k) {
        for (std::size_t a = k; a < left.size(); a += workers)
            for (const auto& q : right)
                if (keep(left[a], q)) partial[k].push_back({left[a], q});
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work, k);
        for (auto& t : pool) t.join();
    }
    std::vector<TensorElement> out;
    for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool member(const Partition& lambda, const Partition& mu, const Permutation& w, const GTPattern& p,
            const GTPattern& q) {
    require_shapes(lambda, mu, w);
    if (p.shape() != lambda || q.shape() != mu) throw std::invalid_argument("pattern shapes do not match λ, μ");
    return bruhat_leq(associated_permutation(p, q), w);
}

KKCrystal kk_crystal(const Partition& lambda, const Partition& mu, const Permutation& w, const KKOptions& options) {
    require_shapes(lambda, mu, w);
    const auto w0 = longest_element(w.rank());
    auto members = filter_pairs(lambda, mu, options, [&](const GTPattern& p, const GTPattern& q) {
        return bruhat_leq(compose(demazure_product(pair_word(p, q)), w0), w);
    });
    return {lambda, mu, w, std::move(members)};
}

CharPoly kk_character(const Partition& lambda, const Partition& mu, const Permutation& w, const KKOptions& options) {
    const auto kk = kk_crystal(lambda, mu, w, options);
    CharPoly ch(lambda.rank());
    for (const auto& t : kk.members) ch.add_term(weight(t), 1);
    return ch;
}

std::vector<TensorElement> cartan_component(const Partition& lambda, const Partition& mu, const KKOptions& options) {
    if (lambda.rank() != mu.rank()) throw std::invalid_argument("shapes have different lengths");
    const auto w0 = longest_element(mu.rank());
    return filter_pairs(lambda, mu, options,
                        [&](const GTPattern& p, const GTPattern& q) { return subword_dominates(pair_word(p, q), w0); });
}

std::map<Weight, std::int64_t> decompose(const std::vector<Component>& comps, const KKCrystal& kk) {
    std::map<Weight, std::int64_t> mult;
    for (const auto& c : comps) {
        std::size_t inside = 0;
        for (const auto& t : c.members)
            if (std::binary_search(kk.members.begin(), kk.members.end(), t)) ++inside;
        if (inside == 0) continue;
        if (inside != c.members.size())
            throw ConsistencyError("component with highest element " + c.highest.left.to_string() + " ⊗ " +
                                   c.highest.right.to_string() + " straddles the KK set (" + std::to_string(inside) +
                                   " of " + std::to_string(c.members.size()) + " members inside)");
        ++mult[c.highest_weight()];
    }
    return mult;
}

std::map<Weight, std::int64_t> decompose(const Partition& lambda, const Partition& mu, const Permutation& w,
                                         const KKOptions& options) {
    const auto kk = kk_crystal(lambda, mu, w, options);
    return decompose(components(lambda, mu, TensorConvention::Standard, options.limit), kk);
}

}  // namespace gtkk
