#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtkk/crystal.hpp"
#include "gtkk/error.hpp"
#include "gtkk/reading.hpp"
#include "gtkk/tableau.hpp"

#include <algorithm>
#include <map>

using namespace gtkk;

namespace {

GTPattern rows(std::vector<std::vector<Entry>> r) { return GTPattern(r); }

}  // namespace

TEST_CASE("raising operator examples") {
    CHECK_FALSE(raise(highest_pattern(Partition{1, 0, 0}), 1));
    CHECK(raise(rows({{0}, {1, 0}, {1, 0, 0}}), 1) == rows({{1}, {1, 0}, {1, 0, 0}}));
    CHECK_FALSE(raise(highest_pattern(Partition{1, 1, 0}), 1));
    CHECK(d_values(rows({{0}, {1, 0}, {1, 0, 0}}), 1) == std::vector<Entry>{-1, -1});
}

TEST_CASE("lowering operator examples") {
    CHECK(lower(highest_pattern(Partition{1, 0, 0}), 1) == rows({{0}, {1, 0}, {1, 0, 0}}));
    CHECK(d_values(highest_pattern(Partition{1, 0, 0}), 1) == std::vector<Entry>{0, 1});
    CHECK_FALSE(lower(highest_pattern(Partition{1, 1, 0}), 1));
    CHECK(lower(rows({{0}, {1, 0}, {1, 0, 0}}), 2) == rows({{0}, {0, 0}, {1, 0, 0}}));
    CHECK(d_values(rows({{0}, {1, 0}, {1, 0, 0}}), 2) == std::vector<Entry>{0, 1, 1});
}

TEST_CASE("string lengths") {
    for (int i = 1; i <= 2; ++i) CHECK(epsilon(highest_pattern(Partition{2, 1, 0}), i) == 0);
    const auto p = rows({{0}, {1, 0}, {1, 0, 0}});
    CHECK(epsilon(p, 1) == 1);
    CHECK(phi(p, 1) == 0);
    for (const auto& q : enumerate(Partition{2, 1, 0})) {
        for (int i = 1; i <= 2; ++i) {
            const auto d = d_values(q, i);
            CHECK(epsilon_by_walk(q, i) == -*std::min_element(d.begin(), d.end()));
            CHECK(epsilon(q, i) == epsilon_by_walk(q, i));
            CHECK(phi(q, i) == phi_by_walk(q, i));
        }
    }
}

TEST_CASE("tableau bijection") {
    const auto t = gt_to_tableau(highest_pattern(Partition{3, 2, 0}));
    CHECK(t.rows == std::vector<std::vector<int>>{{1, 1, 1}, {2, 2}});
    for (const auto& mu : partitions_up_to(4, 4))
        for (const auto& p : enumerate(mu)) CHECK(tableau_to_gt(gt_to_tableau(p), 4) == p);
}

TEST_CASE("operators agree with the tableau signature rule") {
    for (const auto& p : enumerate(Partition{2, 1, 0})) {
        for (int i = 1; i <= 2; ++i) {
            CHECK(raise(p, i) == raise_oracle(p, i));
            CHECK(lower(p, i) == lower_oracle(p, i));
        }
    }
    for (const auto& p : enumerate(Partition{2, 2, 1, 0}))
        for (int i = 1; i <= 3; ++i) CHECK(lower(p, i) == lower_oracle(p, i));
    std::size_t checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& mu : partitions_up_to(n, 6)) {
            for (const auto& p : enumerate(mu)) {
                for (int i = 1; i < n; ++i) {
                    CHECK(raise(p, i) == raise_oracle(p, i));
                    CHECK(lower(p, i) == lower_oracle(p, i));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("crystal axioms") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& mu : partitions_up_to(n, 5)) {
            for (const auto& p : enumerate(mu)) {
                for (int i = 1; i < n; ++i) {
                    const auto wt = weight(p);
                    CHECK(phi(p, i) - epsilon(p, i) == coroot_pairing(wt, i));
                    if (auto up = raise(p, i)) {
                        CHECK(is_valid(*up));
                        CHECK(weight(*up) == wt + simple_root(n, i));
                        CHECK(epsilon(*up, i) == epsilon(p, i) - 1);
                        CHECK(phi(*up, i) == phi(p, i) + 1);
                        CHECK(lower(*up, i) == p);
                    } else {
                        CHECK(epsilon(p, i) == 0);
                    }
                    if (auto down = lower(p, i)) {
                        CHECK(is_valid(*down));
                        CHECK(weight(*down) == wt - simple_root(n, i));
                        CHECK(raise(*down, i) == p);
                    } else {
                        CHECK(phi(p, i) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("tensor rule examples") {
    const Partition mu{1, 0, 0};
    const TensorElement top{highest_pattern(mu), highest_pattern(mu)};
    for (int i = 1; i <= 2; ++i) CHECK_FALSE(tensor_raise(top, i));
    const auto down = tensor_lower(top, 1);
    REQUIRE(down);
    CHECK(down->left == *lower(highest_pattern(mu), 1));
    CHECK(down->right == highest_pattern(mu));
    for (const auto& t : product_pairs(Partition{2, 1, 0}, Partition{1, 1, 0})) {
        for (int i = 1; i <= 2; ++i) {
            for (auto conv : {TensorConvention::Standard, TensorConvention::Mirrored}) {
                if (auto d = tensor_lower(t, i, conv)) CHECK(tensor_raise(*d, i, conv) == t);
                if (auto u = tensor_raise(t, i, conv)) CHECK(tensor_lower(*u, i, conv) == t);
            }
        }
    }
}

TEST_CASE("demazure crystals") {
    const Partition mu{1, 0, 0};
    CHECK(demazure_crystal(mu, Word(3, {})) == std::set<GTPattern>{highest_pattern(mu)});
    CHECK(demazure_crystal(mu, Word(3, {1})).size() == 2);
    const auto all = enumerate(Partition{2, 1, 0});
    CHECK(demazure_crystal(Partition{2, 1, 0}, Word(3, {1, 2, 1})) == std::set<GTPattern>(all.begin(), all.end()));
    CHECK_THROWS_AS(demazure_crystal(mu, Word(3, {1, 1})), std::invalid_argument);

    const auto w0 = longest_element(3);
    CHECK(opposite_demazure_crystal(mu, w0) == std::set<GTPattern>{lowest_pattern(mu)});
    CHECK(opposite_demazure_crystal(mu, identity(3)).size() == 3);
    const auto s1 = Permutation::simple_reflection(3, 1);
    const auto s2 = Permutation::simple_reflection(3, 2);
    // e_1 kills the lowest pattern of (1,0,0), e_2 does not.
    CHECK(opposite_demazure_crystal(mu, compose(s1, w0)).size() == 1);
    CHECK(opposite_demazure_crystal(mu, compose(s2, w0)).size() == 2);
}

TEST_CASE("demazure crystals are independent of the reduced word") {
    for (const auto& mu : partitions_up_to(4, 3)) {
        for (const auto& w : all_permutations(4)) {
            const auto ref = demazure_crystal(mu, w);
            const auto opp = opposite_demazure_crystal(mu, w);
            for (const auto& word : all_reduced_words(w)) CHECK(demazure_crystal(mu, word) == ref);
            for (const auto& word : all_reduced_words(compose(w, longest_element(4))))
                CHECK(opposite_demazure_crystal(mu, word) == opp);
        }
    }
}

TEST_CASE("demazure atlas and extreme directions") {
    const auto w0 = longest_element(3);
    for (const auto& mu : partitions_up_to(3, 4)) {
        const DemazureAtlas atlas(mu);
        for (const auto& p : enumerate(mu)) {
            const auto lo = atlas.min_demazure_index(p);
            const auto hi = atlas.max_opposite_index(p);
            REQUIRE(lo);
            REQUIRE(hi);
            CHECK(*lo == compose(demazure_product(i_word(p)), w0));
            CHECK(*hi == demazure_product(f_word(p)).inverse());
            // Memberships are upward (resp. downward) closed in Bruhat order.
            for (const auto& w : all_permutations(3)) {
                CHECK(atlas.demazure(w).count(p) == (bruhat_leq(*lo, w) ? 1U : 0U));
                CHECK(atlas.opposite(w).count(p) == (bruhat_leq(w, *hi) ? 1U : 0U));
            }
        }
    }
}

TEST_CASE("components of the tensor crystal") {
    const Partition mu{1, 0, 0};
    const auto comps = components(mu, mu);
    REQUIRE(comps.size() == 2);
    std::multiset<std::size_t> sizes;
    std::set<Weight> highs;
    for (const auto& c : comps) {
        sizes.insert(c.members.size());
        highs.insert(c.highest_weight());
    }
    CHECK(sizes == std::multiset<std::size_t>{3, 6});
    CHECK(highs == std::set<Weight>{Weight{{2, 0, 0}}, Weight{{1, 1, 0}}});
    CHECK(components(Partition{0, 0, 0}, Partition{2, 1, 0}).size() == 1);
    CHECK_THROWS_AS(product_pairs(Partition{4, 2, 0}, Partition{4, 2, 0}, 10), GuardError);
}

TEST_CASE("component highest weights follow the Littlewood-Richardson rule") {
    // V(2,1,0) ⊗ V(1,0,0) = V(3,1,0) ⊕ V(2,2,0) ⊕ V(2,1,1).
    std::map<Weight, int> got;
    for (const auto& c : components(Partition{2, 1, 0}, Partition{1, 0, 0})) ++got[c.highest_weight()];
    CHECK(got == std::map<Weight, int>{{Weight{{3, 1, 0}}, 1}, {Weight{{2, 2, 0}}, 1}, {Weight{{2, 1, 1}}, 1}});
}

TEST_CASE("crystal edges") {
    const auto patterns = enumerate(Partition{1, 0, 0});
    const auto edges = crystal_edges(patterns);
    CHECK(edges.size() == 2);
    for (const auto& e : edges) CHECK(lower(patterns[e.from], e.label) == patterns[e.to]);
}
