#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "gtkk/crystal.hpp"
#include "gtkk/reading.hpp"
#include "oracles.hpp"

using namespace gtkk;

namespace {

std::vector<int> letters(const Word& w) { return w.letters(); }

Permutation ev(int n, std::vector<int> l) { return evaluate(Word(n, std::move(l))); }

// Words read straight off the definitions, without the library's loop order.
std::vector<int> f_word_oracle(const GTPattern& p) {
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (auto [i, j] : index_pairs(p.size()))
        if (p.at(i - 1, j) == p.at(i, j + 1)) keyed.push_back({{-i, j}, j});
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (const auto& k : keyed) out.push_back(k.second);
    return out;
}

std::vector<int> i_word_oracle(const GTPattern& q) {
    std::vector<int> out;
    for (auto [i, j] : index_pairs(q.size()))
        if (q.at(i, j) == q.at(i - 1, j)) out.push_back(i - j);
    return out;
}

}  // namespace

TEST_CASE("worked pair words") {
    const auto p = fixtures::pair_left();
    const auto q = fixtures::pair_right();
    CHECK(letters(f_word(p)) == std::vector<int>{1, 2, 4, 2, 1, 1});
    CHECK(letters(i_word(q)) == std::vector<int>{1, 3, 2, 4, 2});
    CHECK(letters(pair_word(p, q)) == std::vector<int>{1, 2, 4, 2, 1, 1, 1, 3, 2, 4, 2});
    const auto r = read_pair(p, q);
    CHECK(r.demazure_product == ev(5, {1, 4, 2, 1, 3, 4, 2}));
}

TEST_CASE("worked pair associated permutation") {
    // The demazure product times w0; see the README note on this example.
    const auto p = associated_permutation(fixtures::pair_left(), fixtures::pair_right());
    CHECK(p == ev(5, {3, 4, 2}));
    CHECK(p == compose(ev(5, {1, 4, 2, 1, 3, 4, 2}), longest_element(5)));
    const auto w0 = longest_element(5);
    CHECK(compose(compose(w0, ev(5, {2, 1, 3})), w0) == p);
}

TEST_CASE("extreme patterns") {
    const Partition mu{3, 1, 0};
    CHECK(f_word(highest_pattern(mu)).empty());
    CHECK(demazure_product(f_word(lowest_pattern(mu))) == longest_element(3));
    CHECK(letters(i_word(highest_pattern(mu))) == std::vector<int>{1, 2, 1});
    CHECK(demazure_product(i_word(highest_pattern(mu))) == longest_element(3));
    CHECK(i_word(lowest_pattern(mu)).empty());
    CHECK(pair_word(highest_pattern(mu), lowest_pattern(mu)).empty());
    for (const auto& p : enumerate(mu)) {
        CHECK(letters(pair_word(p, highest_pattern(mu))) ==
              letters(f_word(p).concat(i_word(highest_pattern(mu)))));
        CHECK(associated_permutation(p, highest_pattern(mu)).is_identity());
    }
}

TEST_CASE("reading words against the definitions") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& mu : partitions_up_to(n, 4)) {
            for (const auto& p : enumerate(mu)) {
                CHECK(letters(f_word(p)) == f_word_oracle(p));
                CHECK(letters(i_word(p)) == i_word_oracle(p));
            }
        }
    }
}

TEST_CASE("associated permutation against the subword oracle") {
    const Partition lambda{2, 1, 0}, mu{1, 1, 0};
    const auto w0 = longest_element(3).images();
    for (const auto& p : enumerate(lambda)) {
        for (const auto& q : enumerate(mu)) {
            const auto word = letters(pair_word(p, q));
            const auto expected = oracle::compose(oracle::demazure_product(3, word), w0);
            CHECK(associated_permutation(p, q).images() == expected);
        }
    }
}

TEST_CASE("associated permutation on the defining representation") {
    const Partition mu{1, 0, 0};
    const auto s1 = Permutation::simple_reflection(3, 1);
    std::map<Permutation, int> counts;
    for (const auto& c : components(mu, mu)) {
        for (const auto& t : c.members) {
            const auto p = associated_permutation(t.left, t.right);
            ++counts[p];
            if (c.members.size() == 3) CHECK(p == s1);
        }
    }
    CHECK(counts[identity(3)] == 6);
    CHECK(counts[s1] == 3);
}

TEST_CASE("size mismatch") {
    CHECK_THROWS_AS(pair_word(highest_pattern(Partition{1, 0}), highest_pattern(Partition{1, 0, 0})),
                    std::invalid_argument);
}
