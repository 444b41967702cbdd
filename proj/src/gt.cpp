#include "gtkk/gt.hpp"

#include "gtkk/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtkk {

namespace {

Entry checked_add(Entry a, Entry b) {
    Entry r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in pattern arithmetic");
    return r;
}

Entry checked_sub(Entry a, Entry b) {
    Entry r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in pattern arithmetic");
    return r;
}

void require_same_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight length mismatch");
}

std::string join(const std::vector<Entry>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<Entry> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition " + join(parts_) + " is not weakly decreasing");
    }
}

Entry Partition::total() const {
    Entry t = 0;
    for (Entry x : parts_) t = checked_add(t, x);
    return t;
}

std::string Partition::to_string() const { return "(" + join(parts_) + ")"; }

Partition operator+(const Partition& a, const Partition& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("partition length mismatch");
    std::vector<Entry> sum(a.parts().size());
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = checked_add(a.parts()[k], b.parts()[k]);
    return Partition(std::move(sum));
}

// ---------------------------------------------------------------------------
// Weight

Weight operator+(const Weight& a, const Weight& b) {
    require_same_rank(a, b);
    Weight r{std::vector<Entry>(a.coords.size())};
    for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] = checked_add(a.coords[k], b.coords[k]);
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    require_same_rank(a, b);
    Weight r{std::vector<Entry>(a.coords.size())};
    for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] = checked_sub(a.coords[k], b.coords[k]);
    return r;
}

Weight simple_root(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("simple root index out of range");
    Weight r{std::vector<Entry>(static_cast<std::size_t>(n), 0)};
    r.coords[static_cast<std::size_t>(i - 1)] = 1;
    r.coords[static_cast<std::size_t>(i)] = -1;
    return r;
}

Entry coroot_pairing(const Weight& wt, int i) { return checked_sub(wt[i], wt[i + 1]); }

// ---------------------------------------------------------------------------
// GTPattern

GTPattern::GTPattern(const std::vector<std::vector<Entry>>& rows) : n_(static_cast<int>(rows.size())) {
    if (rows.empty()) throw std::invalid_argument("pattern must have at least one row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != i + 1)
            throw std::invalid_argument("malformed triangle: row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries");
        entries_.insert(entries_.end(), rows[i].begin(), rows[i].end());
    }
}

std::vector<Entry> GTPattern::row(int i) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(offset(i, 1));
    return std::vector<Entry>(first, first + i);
}

std::vector<std::vector<Entry>> GTPattern::rows() const {
    std::vector<std::vector<Entry>> out;
    for (int i = 1; i <= n_; ++i) out.push_back(row(i));
    return out;
}

Partition GTPattern::shape() const { return Partition(row(n_)); }

std::string GTPattern::to_string() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) s += (i > 1 ? "/(" : "(") + join(row(i)) + ")";
    return s;
}

std::vector<IndexPair> index_pairs(int n) {
    std::vector<IndexPair> out;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.emplace_back(i, j);
    return out;
}

int pair_position(int i, int j) { return (i - 1) * (i - 2) / 2 + (j - 1); }

Entry ne_difference(const GTPattern& p, int i, int j) { return checked_sub(p.at(i, j), p.at(i - 1, j)); }

Entry se_difference(const GTPattern& p, int i, int j) { return checked_sub(p.at(i - 1, j), p.at(i, j + 1)); }

ValidationReport validate(const GTPattern& p) {
    ValidationReport report;
    for (auto [i, j] : index_pairs(p.size())) {
        if (Entry d = ne_difference(p, i, j); d < 0) report.violations.push_back({InequalityKind::NE, i, j, d});
        if (Entry d = se_difference(p, i, j); d < 0) report.violations.push_back({InequalityKind::SE, i, j, d});
    }
    report.ok = report.violations.empty();
    return report;
}

bool is_valid(const GTPattern& p) {
    for (auto [i, j] : index_pairs(p.size()))
        if (ne_difference(p, i, j) < 0 || se_difference(p, i, j) < 0) return false;
    return true;
}

Weight weight(const GTPattern& p) {
    Weight w{std::vector<Entry>(static_cast<std::size_t>(p.size()))};
    Entry previous = 0;
    for (int i = 1; i <= p.size(); ++i) {
        Entry row_sum = 0;
        for (int j = 1; j <= i; ++j) row_sum = checked_add(row_sum, p.at(i, j));
        w.coords[static_cast<std::size_t>(i - 1)] = checked_sub(row_sum, previous);
        previous = row_sum;
    }
    return w;
}

std::vector<IndexPair> ne_equalities(const GTPattern& p) {
    std::vector<IndexPair> out;
    for (auto [i, j] : index_pairs(p.size()))
        if (p.at(i, j) == p.at(i - 1, j)) out.emplace_back(i, j);
    return out;
}

std::vector<IndexPair> se_equalities(const GTPattern& p) {
    std::vector<IndexPair> out;
    for (auto [i, j] : index_pairs(p.size()))
        if (p.at(i - 1, j) == p.at(i, j + 1)) out.emplace_back(i, j);
    return out;
}

namespace {

void require_mask_rank(int n) {
    if (n > 11) throw GuardError("equality masks support n ≤ 11");
}

}  // namespace

std::uint64_t ne_equality_mask(const GTPattern& p) {
    require_mask_rank(p.size());
    std::uint64_t mask = 0;
    for (auto [i, j] : ne_equalities(p)) mask |= std::uint64_t{1} << pair_position(i, j);
    return mask;
}

std::uint64_t se_equality_mask(const GTPattern& p) {
    require_mask_rank(p.size());
    std::uint64_t mask = 0;
    for (auto [i, j] : se_equalities(p)) mask |= std::uint64_t{1} << pair_position(i, j);
    return mask;
}

GTPattern highest_pattern(const Partition& mu) {
    const int n = mu.rank();
    std::vector<std::vector<Entry>> rows;
    for (int i = 1; i <= n; ++i) rows.emplace_back(mu.parts().begin(), mu.parts().begin() + i);
    return GTPattern(rows);
}

GTPattern lowest_pattern(const Partition& mu) {
    const int n = mu.rank();
    std::vector<std::vector<Entry>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<Entry> r;
        for (int j = 1; j <= i; ++j) r.push_back(mu[n - i + j]);
        rows.push_back(std::move(r));
    }
    return GTPattern(rows);
}

std::uint64_t dimension_oracle(const Partition& mu) {
    using Big = unsigned __int128;
    const int n = mu.rank();
    Big num = 1, den = 1;
    auto reduce = [&] {
        Big a = num, b = den;
        while (b) {
            Big t = a % b;
            a = b;
            b = t;
        }
        num /= a;
        den /= a;
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const auto factor = static_cast<Big>(mu[i] - mu[j] + (j - i));
            if (num > (~Big{0}) / factor) throw GuardError("dimension overflow");
            num *= factor;
            den *= static_cast<Big>(j - i);
            reduce();
        }
    }
    if (den != 1 || num > static_cast<Big>(~std::uint64_t{0})) throw GuardError("dimension overflow");
    return static_cast<std::uint64_t>(num);
}

namespace {

// Fills rows n-1, n-2, ..., 1 of `work` by recursion on the row index.
void extend_upwards(std::vector<std::vector<Entry>>& work, int i, std::vector<GTPattern>& out) {
    if (i == 0) {
        out.emplace_back(work);
        return;
    }
    const auto& below = work[static_cast<std::size_t>(i)];
    auto& row = work[static_cast<std::size_t>(i - 1)];
    // Odometer over row[j] ∈ [below[j+1], below[j]].
    for (int j = 0; j < i; ++j) row[static_cast<std::size_t>(j)] = below[static_cast<std::size_t>(j + 1)];
    for (;;) {
        extend_upwards(work, i - 1, out);
        int j = i - 1;
        while (j >= 0 && row[static_cast<std::size_t>(j)] == below[static_cast<std::size_t>(j)]) {
            row[static_cast<std::size_t>(j)] = below[static_cast<std::size_t>(j + 1)];
            --j;
        }
        if (j < 0) break;
        ++row[static_cast<std::size_t>(j)];
    }
}

}  // namespace

std::vector<GTPattern> enumerate(const Partition& mu, std::uint64_t limit) {
    const int n = mu.rank();
    if (n > kMaxEnumerationRank) throw GuardError("pattern enumeration is limited to n ≤ 16");
    const auto count = dimension_oracle(mu);
    if (count > limit)
        throw GuardError("shape " + mu.to_string() + " has " + std::to_string(count) + " patterns (limit " +
                         std::to_string(limit) + ")");
    std::vector<std::vector<Entry>> work;
    for (int i = 1; i <= n; ++i) work.emplace_back(static_cast<std::size_t>(i), 0);
    work.back() = mu.parts();
    std::vector<GTPattern> out;
    out.reserve(count);
    extend_upwards(work, n - 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int n, Entry max_total) {
    if (n < 1) throw std::invalid_argument("partition length must be positive");
    std::vector<Partition> out;
    std::vector<Entry> cur;
    auto rec = [&](auto&& self, Entry remaining, Entry cap) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (Entry x = 0; x <= std::min(cap, remaining); ++x) {
            cur.push_back(x);
            self(self, remaining - x, x);
            cur.pop_back();
        }
    };
    rec(rec, max_total, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gtkk
