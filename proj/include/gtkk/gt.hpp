#pragma once

// Partitions, Gelfand-Tsetlin patterns and weights.
//
// A pattern of size n is stored row by row, top (row 1, one entry) to bottom
// (row n, the shape). Entry a_{ij} sits in row i, column j, 1-based, with
// n ≥ i ≥ j ≥ 1. In the usual rotated triangle pictures the node drawn at
// grid position (x, y), 0 ≤ x ≤ y < n, is a_{n-y+x, x+1}.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gtkk {

using Entry = std::int64_t;

/// Weakly decreasing sequence of nonnegative integers (GL_n highest weight).
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument if empty, negative, or not weakly decreasing.
    explicit Partition(std::vector<Entry> parts);
    Partition(std::initializer_list<Entry> parts) : Partition(std::vector<Entry>(parts)) {}

    int rank() const { return static_cast<int>(parts_.size()); }
    Entry operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<Entry>& parts() const { return parts_; }
    Entry total() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<Entry> parts_;
};

Partition operator+(const Partition& a, const Partition& b);

/// Integer weight vector of length n.
struct Weight {
    std::vector<Entry> coords;

    int rank() const { return static_cast<int>(coords.size()); }
    Entry operator[](int i) const { return coords[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
/// α_i = e_i − e_{i+1}.
Weight simple_root(int n, int i);
/// ⟨wt, α_i^∨⟩ = wt_i − wt_{i+1}.
Entry coroot_pairing(const Weight& wt, int i);

/// Triangular integer array. Interlacing is NOT enforced at construction so
/// that arbitrary triangles can be read; use validate() for that.
class GTPattern {
public:
    GTPattern() = default;
    /// rows[i-1] must have exactly i entries.
    explicit GTPattern(const std::vector<std::vector<Entry>>& rows);

    int size() const { return n_; }
    /// a_{ij}, 1 ≤ j ≤ i ≤ n.
    Entry at(int i, int j) const { return entries_[offset(i, j)]; }
    void set(int i, int j, Entry value) { entries_[offset(i, j)] = value; }

    std::vector<Entry> row(int i) const;
    std::vector<std::vector<Entry>> rows() const;
    Partition shape() const;
    /// Row-major concatenation row1‖row2‖…‖rown.
    const std::vector<Entry>& flat() const { return entries_; }

    std::string to_string() const;

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    /// Lexicographic on flat(), the documented enumeration order.
    friend auto operator<=>(const GTPattern&, const GTPattern&) = default;

private:
    static std::size_t offset(int i, int j) {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2 + static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<Entry> entries_;
};

/// Index pair (i, j) with n ≥ i > j ≥ 1, naming NE_{ij} / SE_{ij}.
using IndexPair = std::pair<int, int>;

/// All (i, j) with n ≥ i > j ≥ 1, lexicographic.
std::vector<IndexPair> index_pairs(int n);

enum class InequalityKind { NE, SE };

struct Violation {
    InequalityKind kind;
    int i;
    int j;
    Entry difference;  // negative

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// NE_{ij}(A) = a_{ij} − a_{i−1,j}.
Entry ne_difference(const GTPattern& p, int i, int j);
/// SE_{ij}(A) = a_{i−1,j} − a_{i,j+1}.
Entry se_difference(const GTPattern& p, int i, int j);

ValidationReport validate(const GTPattern& p);
bool is_valid(const GTPattern& p);

Weight weight(const GTPattern& p);

/// Lexicographically sorted index sets where NE (resp. SE) equality holds.
std::vector<IndexPair> ne_equalities(const GTPattern& p);
std::vector<IndexPair> se_equalities(const GTPattern& p);

/// Same sets as bitmasks over index_pairs(n) positions (n ≤ 11).
std::uint64_t ne_equality_mask(const GTPattern& p);
std::uint64_t se_equality_mask(const GTPattern& p);
/// Position of (i, j) within index_pairs(n).
int pair_position(int i, int j);

GTPattern highest_pattern(const Partition& mu);
GTPattern lowest_pattern(const Partition& mu);

/// ∏_{i<j} (μ_i − μ_j + j − i)/(j − i), exact.
std::uint64_t dimension_oracle(const Partition& mu);

inline constexpr int kMaxEnumerationRank = 16;
inline constexpr std::uint64_t kDefaultPatternLimit = 10'000'000;

/// All integral patterns with bottom row μ in lexicographic order of flat().
/// Throws GuardError when n exceeds kMaxEnumerationRank or the dimension
/// exceeds `limit`.
std::vector<GTPattern> enumerate(const Partition& mu, std::uint64_t limit = kDefaultPatternLimit);

/// All partitions with `n` parts and total ≤ max_total, sorted.
std::vector<Partition> partitions_up_to(int n, Entry max_total);

}  // namespace gtkk
