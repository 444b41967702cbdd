#include "gtkk/tableau.hpp"

#include <stdexcept>
#include <utility>

namespace gtkk {

Tableau gt_to_tableau(const GTPattern& p) {
    const int n = p.size();
    Tableau t;
    t.rows.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const Entry above = (j <= i - 1) ? p.at(i - 1, j) : 0;
            const Entry count = p.at(i, j) - above;
            if (count < 0) throw std::invalid_argument("pattern does not interlace; no tableau exists");
            t.rows[static_cast<std::size_t>(j - 1)].insert(t.rows[static_cast<std::size_t>(j - 1)].end(),
                                                           static_cast<std::size_t>(count), i);
        }
    }
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    return t;
}

GTPattern tableau_to_gt(const Tableau& t, int n) {
    std::vector<std::vector<Entry>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<Entry> row;
        for (int j = 1; j <= i; ++j) {
            Entry count = 0;
            if (static_cast<std::size_t>(j) <= t.rows.size())
                for (int x : t.rows[static_cast<std::size_t>(j - 1)])
                    if (x <= i) ++count;
            row.push_back(count);
        }
        rows.push_back(std::move(row));
    }
    return GTPattern(rows);
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> word;
    for (auto r = t.rows.rbegin(); r != t.rows.rend(); ++r) word.insert(word.end(), r->begin(), r->end());
    return word;
}

namespace {

struct Cell {
    std::size_t row;
    std::size_t col;
};

struct Signature {
    std::vector<Cell> free_i;      // uncancelled letters i, reading order
    std::vector<Cell> free_next;   // uncancelled letters i+1, reading order
};

Signature signature(const Tableau& t, int i) {
    Signature s;
    for (std::size_t r = t.rows.size(); r-- > 0;) {
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const int x = t.rows[r][c];
            if (x == i + 1) {
                s.free_next.push_back({r, c});
            } else if (x == i) {
                if (!s.free_next.empty())
                    s.free_next.pop_back();
                else
                    s.free_i.push_back({r, c});
            }
        }
    }
    return s;
}

void require_index(const GTPattern& p, int i) {
    if (i < 1 || i > p.size() - 1) throw std::invalid_argument("crystal operator index out of range");
}

}  // namespace

std::optional<GTPattern> raise_oracle(const GTPattern& p, int i) {
    require_index(p, i);
    Tableau t = gt_to_tableau(p);
    const auto s = signature(t, i);
    if (s.free_next.empty()) return std::nullopt;
    const Cell c = s.free_next.front();
    t.rows[c.row][c.col] = i;
    return tableau_to_gt(t, p.size());
}

std::optional<GTPattern> lower_oracle(const GTPattern& p, int i) {
    require_index(p, i);
    Tableau t = gt_to_tableau(p);
    const auto s = signature(t, i);
    if (s.free_i.empty()) return std::nullopt;
    const Cell c = s.free_i.back();
    t.rows[c.row][c.col] = i + 1;
    return tableau_to_gt(t, p.size());
}

}  // namespace gtkk
