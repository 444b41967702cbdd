// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include "fixtures.hpp"
#include "gtkk/charpoly.hpp"
#include "gtkk/kk.hpp"
#include "gtkk/kogan.hpp"
#include "gtkk/reading.hpp"
#include "gtkk/tableau.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gtkk;

namespace {

// Collects failed sub-checks; the first few are reported.
struct Checks {
    std::vector<std::string> failures;
    std::uint64_t count = 0;

    void operator()(bool ok, const std::string& what) {
        ++count;
        if (!ok) failures.push_back(what);
    }
};

Permutation ev(int n, std::vector<int> l) { return evaluate(Word(n, std::move(l))); }

std::string str(const Permutation& w) { return w.to_string(); }

CharPoly char_of(const std::vector<TensorElement>& members, int n) {
    CharPoly ch(n);
    for (const auto& t : members) ch.add_term(weight(t), 1);
    return ch;
}

void ac1(Checks& c) {
    const auto got = demazure_product(Word(4, {1, 3, 1, 2, 2}));
    c(got == ev(4, {3, 1, 2}), "demazure_product([1,3,1,2,2]) = " + str(got));
}

void ac2(Checks& c) {
    const auto p = fixtures::pair_left();
    const auto q = fixtures::pair_right();
    c(f_word(p).letters() == std::vector<int>{1, 2, 4, 2, 1, 1}, "f_word");
    c(i_word(q).letters() == std::vector<int>{1, 3, 2, 4, 2}, "i_word");
    c(pair_word(p, q).letters() == std::vector<int>{1, 2, 4, 2, 1, 1, 1, 3, 2, 4, 2}, "pair_word");
    const auto dp = demazure_product(pair_word(p, q));
    c(dp == ev(5, {1, 4, 2, 1, 3, 4, 2}), "demazure_product = " + str(dp));
    const auto perm = associated_permutation(p, q);
    c(perm == ev(5, {2, 1, 3}), "associated_permutation = " + str(perm) + ", expected " + str(ev(5, {2, 1, 3})));
}

void ac3(Checks& c) {
    const auto wt = weight(fixtures::weight_example());
    c(wt.coords == std::vector<Entry>{3, 2, 4, 2, 1}, "weight");
}

void ac4(Checks& c) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& mu : partitions_up_to(n, 6)) {
            for (const auto& p : enumerate(mu)) {
                for (int i = 1; i < n; ++i) {
                    const auto up = raise(p, i);
                    const auto down = lower(p, i);
                    const std::string at = p.to_string() + " i=" + std::to_string(i);
                    c(up == raise_oracle(p, i) && down == lower_oracle(p, i), "oracle mismatch at " + at);
                    const auto wt = weight(p);
                    const Entry eps = epsilon(p, i), ph = phi(p, i);
                    // (1) weight shift, (2) string lengths shift, (3) φ − ε = ⟨wt, α∨⟩, (4) e and f invert.
                    bool ok = ph - eps == coroot_pairing(wt, i) && eps == epsilon_by_walk(p, i);
                    if (up)
                        ok = ok && weight(*up) == wt + simple_root(n, i) && epsilon(*up, i) == eps - 1 &&
                             phi(*up, i) == ph + 1 && lower(*up, i) == p;
                    if (down)
                        ok = ok && weight(*down) == wt - simple_root(n, i) && epsilon(*down, i) == eps + 1 &&
                             phi(*down, i) == ph - 1 && raise(*down, i) == p;
                    c(ok, "axiom failure at " + at);
                }
            }
        }
    }
}

void ac5(Checks& c) {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& mu : partitions_up_to(n, 4)) {
            for (const auto& w : all_permutations(n)) {
                const auto ref = demazure_crystal(mu, w);
                const std::vector<GTPattern> members(ref.begin(), ref.end());
                const auto ch = character_of(members);
                for (const auto& word : all_reduced_words(w)) {
                    c(demazure_crystal(mu, word) == ref, "crystal depends on word, μ=" + mu.to_string());
                    c(demazure_character(mu, word) == ch, "character mismatch, μ=" + mu.to_string() + " w=" + str(w));
                }
            }
        }
    }
}

void ac6(Checks& c) {
    for (int n = 1; n <= 4; ++n) {
        const auto w0 = longest_element(n);
        for (const auto& mu : partitions_up_to(n, 4)) {
            for (const auto& w : all_permutations(n)) {
                c(kogan_points(mu, compose(w0, w)) == demazure_crystal(mu, w),
                  "kogan μ=" + mu.to_string() + " w=" + str(w));
                c(dual_kogan_points(mu, compose(compose(w0, w), w0)) == opposite_demazure_crystal(mu, w),
                  "dual kogan μ=" + mu.to_string() + " w=" + str(w));
            }
        }
    }
}

template <typename F>
void over_pairs(F&& f) {
    for (const auto& lambda : partitions_up_to(3, 3))
        for (const auto& mu : partitions_up_to(3, 3)) f(lambda, mu);
}

void ac7(Checks& c) {
    over_pairs([&](const Partition& lambda, const Partition& mu) {
        const std::string at = lambda.to_string() + "⊗" + mu.to_string();
        for (const auto& w : all_permutations(3)) {
            const auto members = kk_crystal(lambda, mu, w).members;
            for (const auto& t : members)
                for (int i = 1; i <= 2; ++i) {
                    const auto up = tensor_raise(t, i);
                    const auto down = tensor_lower(t, i);
                    c((!up || std::binary_search(members.begin(), members.end(), *up)) &&
                          (!down || std::binary_search(members.begin(), members.end(), *down)),
                      "not closed " + at + " w=" + str(w));
                }
        }
        for (const auto& comp : components(lambda, mu)) {
            const auto p0 = associated_permutation(comp.highest.left, comp.highest.right);
            for (const auto& t : comp.members)
                c(associated_permutation(t.left, t.right) == p0, "p not constant on a component of " + at);
        }
    });
}

void ac8(Checks& c) {
    over_pairs([&](const Partition& lambda, const Partition& mu) {
        const std::string at = lambda.to_string() + "⊗" + mu.to_string();
        c(kk_character(lambda, mu, identity(3)) == schur(lambda + mu), "identity endpoint " + at);
        c(kk_character(lambda, mu, longest_element(3)) == schur(lambda) * schur(mu), "w0 endpoint " + at);
    });
}

void ac9(Checks& c) {
    over_pairs([&](const Partition& lambda, const Partition& mu) {
        const std::string at = lambda.to_string() + "⊗" + mu.to_string();
        const auto comps = components(lambda, mu);
        std::map<Permutation, KKCrystal> kks;
        std::map<Permutation, std::map<Weight, std::int64_t>> mults;
        for (const auto& w : all_permutations(3)) {
            kks.emplace(w, kk_crystal(lambda, mu, w));
            mults.emplace(w, decompose(comps, kks.at(w)));
        }
        for (const auto& u : all_permutations(3))
            for (const auto& v : all_permutations(3)) {
                if (!bruhat_leq(u, v)) continue;
                const auto& a = kks.at(u).members;
                const auto& b = kks.at(v).members;
                c(std::includes(b.begin(), b.end(), a.begin(), a.end()), "members not nested " + at);
                for (const auto& [hw, m] : mults.at(u)) {
                    const auto it = mults.at(v).find(hw);
                    c(it != mults.at(v).end() && it->second >= m, "multiplicity drops " + at);
                }
            }
    });
}

void ac10(Checks& c) {
    const auto w0 = longest_element(3);
    over_pairs([&](const Partition& lambda, const Partition& mu) {
        const std::string at = lambda.to_string() + "⊗" + mu.to_string();
        for (const auto& w : all_permutations(3)) {
            const auto v = compose(w, w0);
            c(bikogan_union_points(lambda, mu, v) == kk_crystal(lambda, mu, w).members,
              "union differs " + at + " w=" + str(w));
            for (const auto& f : reduced_bifaces(v))
                for (const auto& t : bikogan_points(lambda, mu, f))
                    c(bruhat_leq(bikogan_varpi(f), demazure_product(pair_word(t.left, t.right))),
                      "face permutation not below " + at);
        }
    });
}

void ac11(Checks& c) {
    for (int n = 1; n <= 3; ++n) {
        const auto w0 = longest_element(n);
        const auto group = all_permutations(n);
        for (const auto& mu : partitions_up_to(n, 4)) {
            const DemazureAtlas atlas(mu);
            for (const auto& p : enumerate(mu)) {
                // Brute-force extremes over the whole group.
                std::vector<Permutation> in, out;
                for (const auto& w : group) {
                    if (atlas.demazure(w).count(p)) in.push_back(w);
                    if (atlas.opposite(w).count(p)) out.push_back(w);
                }
                std::optional<Permutation> lo, hi;
                for (const auto& a : in)
                    if (std::all_of(in.begin(), in.end(), [&](const auto& b) { return bruhat_leq(a, b); })) lo = a;
                for (const auto& a : out)
                    if (std::all_of(out.begin(), out.end(), [&](const auto& b) { return bruhat_leq(b, a); })) hi = a;
                c(lo && *lo == compose(demazure_product(i_word(p)), w0), "initial direction " + p.to_string());
                c(hi && *hi == demazure_product(f_word(p)).inverse(), "final direction " + p.to_string());
            }
        }
    }
}

void ac12(Checks& c) {
    const Partition mu{1, 0, 0};
    const std::vector<std::pair<Permutation, std::size_t>> expected{{identity(3), 6},
                                                                     {Permutation::simple_reflection(3, 1), 9},
                                                                     {Permutation::simple_reflection(3, 2), 6},
                                                                     {longest_element(3), 9}};
    const auto w0 = longest_element(3).images();
    for (const auto& [w, size] : expected) {
        // Brute-force count from the subword oracles.
        std::size_t brute = 0;
        for (const auto& p : enumerate(mu))
            for (const auto& q : enumerate(mu)) {
                const auto perm = oracle::compose(oracle::demazure_product(3, pair_word(p, q).letters()), w0);
                brute += oracle::bruhat_leq(perm, w.images()) ? 1 : 0;
            }
        const auto got = kk_crystal(mu, mu, w).members.size();
        c(brute == size && got == size,
          "w=" + str(w) + " size " + std::to_string(got) + " (oracle " + std::to_string(brute) + ")");
    }
    const auto cart = cartan_component(mu, mu);
    c(cart.size() == 6, "cartan component size " + std::to_string(cart.size()));
    c(char_of(cart, 3) == schur(Partition{2, 0, 0}), "cartan component character");
}

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;  // 0 means untimed
    std::function<void(Checks&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "Demazure product example", 0.001, ac1},
        {"AC2", "worked pair reading", 0, ac2},
        {"AC3", "pattern weight example", 0, ac3},
        {"AC4", "crystal operators vs tableau oracle and axioms", 30, ac4},
        {"AC5", "Demazure crystal and character bridge", 60, ac5},
        {"AC6", "Kogan and dual Kogan equalities", 60, ac6},
        {"AC7", "Kostant-Kumar closure and purity", 60, ac7},
        {"AC8", "character endpoints", 0, ac8},
        {"AC9", "Bruhat filtration", 0, ac9},
        {"AC10", "BiKogan unions", 180, ac10},
        {"AC11", "extreme directions", 0, ac11},
        {"AC12", "derived counts", 0, ac12},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checks checks;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(checks);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool slow = cr.limit_seconds > 0 && seconds > cr.limit_seconds;
        const bool ok = checks.failures.empty() && error.empty() && !slow;
        failed += ok ? 0 : 1;

        std::ostringstream line;
        line << cr.id << ' ' << (ok ? "PASS" : "FAIL") << "  " << cr.title << "  (" << checks.count << " checks, "
             << seconds << " s)";
        if (!error.empty()) line << "  error: " << error;
        if (slow) line << "  over the " << cr.limit_seconds << " s limit";
        for (std::size_t k = 0; k < checks.failures.size() && k < 3; ++k) line << "  [" << checks.failures[k] << ']';
        if (checks.failures.size() > 3) line << "  (+" << checks.failures.size() - 3 << " more)";
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
