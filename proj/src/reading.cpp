#include "gtkk/reading.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtkk {

Word f_word(const GTPattern& p) {
    const int n = p.size();
    std::vector<int> letters;
    for (int i = n; i >= 2; --i)
        for (int j = 1; j < i; ++j)
            if (p.at(i - 1, j) == p.at(i, j + 1)) letters.push_back(j);
    return Word(n, std::move(letters));
}

Word i_word(const GTPattern& q) {
    const int n = q.size();
    std::vector<int> letters;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (q.at(i, j) == q.at(i - 1, j)) letters.push_back(i - j);
    return Word(n, std::move(letters));
}

Word pair_word(const GTPattern& p, const GTPattern& q) {
    if (p.size() != q.size()) throw std::invalid_argument("patterns have different sizes");
    return f_word(p).concat(i_word(q));
}

Permutation associated_permutation(const GTPattern& p, const GTPattern& q) {
    return compose(demazure_product(pair_word(p, q)), longest_element(p.size()));
}

ReadingSummary read_pair(const GTPattern& p, const GTPattern& q) {
    auto word = pair_word(p, q);
    auto dp = demazure_product(word);
    auto perm = compose(dp, longest_element(p.size()));
    return {f_word(p), i_word(q), std::move(word), std::move(dp), std::move(perm)};
}

}  // namespace gtkk
