#include "gtkk/verify.hpp"

#include "gtkk/charpoly.hpp"
#include "gtkk/error.hpp"
#include "gtkk/kk.hpp"
#include "gtkk/kogan.hpp"
#include "gtkk/reading.hpp"
#include "gtkk/tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gtkk {

namespace {

class Property {
public:
    explicit Property(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<json()>& witness) {
        ++result_.checked;
        if (ok || !result_.passed) {
            if (!ok) ++failures_;
            return;
        }
        result_.passed = false;
        ++failures_;
        result_.counterexample = witness();
    }

    void fail(json witness) {
        ++result_.checked;
        ++failures_;
        if (result_.passed) result_.counterexample = std::move(witness);
        result_.passed = false;
    }

    PropertyResult finish() {
        if (!result_.passed) result_.counterexample["failures"] = failures_;
        return result_;
    }

private:
    PropertyResult result_;
    std::uint64_t failures_ = 0;
};

json opt_json(const std::optional<GTPattern>& p) { return p ? to_json(*p) : json(nullptr); }
json opt_json(const std::optional<TensorElement>& t) { return t ? to_json(*t) : json(nullptr); }

bool contains(const std::vector<TensorElement>& sorted, const TensorElement& t) {
    return std::binary_search(sorted.begin(), sorted.end(), t);
}

void check_crystal(const std::vector<Partition>& shapes, Property& oracle, Property& axioms) {
    for (const auto& mu : shapes) {
        const int n = mu.rank();
        for (const auto& p : enumerate(mu)) {
            for (int i = 1; i < n; ++i) {
                const auto up = raise(p, i);
                const auto down = lower(p, i);
                const auto up_oracle = raise_oracle(p, i);
                const auto down_oracle = lower_oracle(p, i);
                oracle.check(up == up_oracle && down == down_oracle, [&] {
                    return json{{"pattern", to_json(p)}, {"i", i},          {"raise", opt_json(up)},
                                {"raise_oracle", opt_json(up_oracle)},     {"lower", opt_json(down)},
                                {"lower_oracle", opt_json(down_oracle)}};
                });

                const Entry eps = epsilon(p, i), ph = phi(p, i);
                const Weight wt = weight(p);
                const Weight alpha = simple_root(n, i);
                bool ok = eps == epsilon_by_walk(p, i) && ph == phi_by_walk(p, i) &&
                          ph == eps + coroot_pairing(wt, i) && eps >= 0 && ph >= 0;
                if (up) {
                    ok = ok && is_valid(*up) && weight(*up) == wt + alpha && epsilon(*up, i) == eps - 1 &&
                         phi(*up, i) == ph + 1 && lower(*up, i) == p;
                }
                if (down) {
                    ok = ok && is_valid(*down) && weight(*down) == wt - alpha && epsilon(*down, i) == eps + 1 &&
                         phi(*down, i) == ph - 1 && raise(*down, i) == p;
                }
                ok = ok && (up.has_value() == (eps > 0)) && (down.has_value() == (ph > 0));
                axioms.check(ok, [&] { return json{{"pattern", to_json(p)}, {"i", i}}; });
            }
        }
    }
}

void check_demazure(const std::vector<Partition>& shapes, const std::vector<Permutation>& group, Property& bridge,
                    Property& fujita, Property& fujita_dual, Property& directions, Property& initial_dir,
                    Property& final_dir) {
    for (const auto& mu : shapes) {
        const int n = mu.rank();
        const auto w0 = longest_element(n);
        const DemazureAtlas atlas(mu);
        for (const auto& w : group) {
            // Both sides must be independent of the reduced word chosen.
            const auto words = all_reduced_words(w);
            const auto& crystal = atlas.demazure(w);
            const std::vector<GTPattern> members(crystal.begin(), crystal.end());
            const auto ch = character_of(members);
            for (const auto& word : words) {
                const bool ok = demazure_crystal(mu, word) == crystal && demazure_character(mu, word) == ch;
                bridge.check(ok, [&] {
                    return json{{"shape", to_json(mu)}, {"w", to_json(w)}, {"word", to_json(word)}};
                });
            }
            fujita.check(kogan_points(mu, compose(w0, w)) == crystal, [&] {
                return json{{"shape", to_json(mu)}, {"w", to_json(w)}};
            });
            const auto opposite = atlas.opposite(w);
            for (const auto& word : all_reduced_words(compose(w, w0))) {
                fujita_dual.check(opposite_demazure_crystal(mu, word) == opposite, [&] {
                    return json{{"shape", to_json(mu)}, {"w", to_json(w)}, {"word", to_json(word)}};
                });
            }
            fujita_dual.check(dual_kogan_points(mu, compose(compose(w0, w), w0)) == opposite, [&] {
                return json{{"shape", to_json(mu)}, {"w", to_json(w)}};
            });
        }
        for (const auto& p : enumerate(mu)) {
            const auto lo = atlas.min_demazure_index(p);
            const auto hi = atlas.max_opposite_index(p);
            directions.check(lo.has_value() && hi.has_value(), [&] { return json{{"pattern", to_json(p)}}; });
            if (lo) {
                const auto predicted = compose(demazure_product(i_word(p)), w0);
                initial_dir.check(predicted == *lo, [&] {
                    return json{{"pattern", to_json(p)}, {"predicted", to_json(predicted)}, {"actual", to_json(*lo)}};
                });
            }
            if (hi) {
                const auto predicted = demazure_product(f_word(p)).inverse();
                final_dir.check(predicted == *hi, [&] {
                    return json{{"pattern", to_json(p)}, {"predicted", to_json(predicted)}, {"actual", to_json(*hi)}};
                });
            }
        }
    }
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& r) { return r.passed; });
}

const PropertyResult* VerifyReport::find(const std::string& name) const {
    for (const auto& r : properties)
        if (r.name == name) return &r;
    return nullptr;
}

json VerifyReport::to_json() const {
    json props = json::array();
    for (const auto& r : properties)
        props.push_back({{"name", r.name}, {"passed", r.passed}, {"checked", r.checked}, {"counterexample", r.counterexample}});
    return json{{"n", options.n},
                {"max_weight", options.max_weight},
                {"convention", options.convention == TensorConvention::Standard ? "standard" : "mirrored"},
                {"passed", all_passed()},
                {"properties", props}};
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.n < 1) throw std::invalid_argument("verify needs n ≥ 1");
    if (options.max_weight < 0) throw std::invalid_argument("verify needs max_weight ≥ 0");
    if (options.n > 5) throw GuardError("verify is limited to n ≤ 5");

    const int n = options.n;
    const auto shapes = partitions_up_to(n, options.max_weight);
    const auto group = all_permutations(n);
    const auto w0 = longest_element(n);
    const KKOptions kk_opts{options.threads, kDefaultPairLimit};

    Property dp_bounds("perm.demazure_product_bounds");
    Property oracle("crystal.oracle_agreement");
    Property axioms("crystal.axioms");
    Property bridge("crystal.demazure_bridge");
    Property fujita("kogan.fujita");
    Property fujita_dual("kogan.fujita_dual");
    Property directions("crystal.unique_directions");
    Property initial_dir("reading.initial_direction");
    Property final_dir("reading.final_direction");
    Property closure("kk.closure");
    Property purity("kk.component_purity");
    Property direction_formula("reading.direction_formula");
    Property endpoints("kk.character_endpoints");
    Property filtration("kk.filtration");
    Property multiplicities("kk.multiplicity_monotone");
    Property bikogan("kogan.bikogan_union");
    Property face_bound("kogan.bikogan_face_bound");
    Property cartan("kk.cartan_component");

    // Demazure product bounds over all words of length ≤ 5.
    {
        std::vector<int> letters;
        auto rec = [&](auto&& self, std::size_t len) -> void {
            const Word word(n, letters);
            const auto top = demazure_product(word);
            for (std::uint32_t mask = 0; mask < (1U << letters.size()); ++mask) {
                std::vector<int> sub;
                for (std::size_t k = 0; k < letters.size(); ++k)
                    if (mask >> k & 1U) sub.push_back(letters[k]);
                dp_bounds.check(bruhat_leq(demazure_product(Word(n, sub)), top),
                                      [&] { return json{{"word", letters}, {"subword", sub}}; });
            }
            for (std::size_t split = 0; split <= letters.size(); ++split) {
                const Word head(n, std::vector<int>(letters.begin(), letters.begin() + static_cast<long>(split)));
                const Word tail(n, std::vector<int>(letters.begin() + static_cast<long>(split), letters.end()));
                dp_bounds.check(
                    demazure_product(head.concat(reduced_word(demazure_product(tail)))) == top,
                    [&] { return json{{"word", letters}, {"split", split}}; });
            }
            if (len == 0) return;
            for (int i = 1; i < n; ++i) {
                letters.push_back(i);
                self(self, len - 1);
                letters.pop_back();
            }
        };
        if (n >= 2) rec(rec, 5);
    }

    check_crystal(shapes, oracle, axioms);
    check_demazure(shapes, group, bridge, fujita, fujita_dual, directions, initial_dir, final_dir);

    std::map<Partition, DemazureAtlas> atlases;
    for (const auto& mu : shapes) atlases.emplace(mu, DemazureAtlas(mu));

    for (const auto& lambda : shapes) {
        for (const auto& mu : shapes) {
            const auto pairs = product_pairs(lambda, mu);
            std::map<Permutation, KKCrystal> kks;
            for (const auto& w : group) kks.emplace(w, kk_crystal(lambda, mu, w, kk_opts));

            // Closure under the tensor operators.
            for (const auto& w : group) {
                const auto& members = kks.at(w).members;
                for (const auto& t : members) {
                    for (int i = 1; i < n; ++i) {
                        const auto up = tensor_raise(t, i, options.convention);
                        const auto down = tensor_lower(t, i, options.convention);
                        closure.check((!up || contains(members, *up)) && (!down || contains(members, *down)), [&] {
                            return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"w", to_json(w)},
                                        {"pair", to_json(t)},        {"i", i},            {"raise", opt_json(up)},
                                        {"lower", opt_json(down)}};
                        });
                    }
                }
            }

            // p constant on components, and decomposition checks.
            std::vector<Component> comps;
            try {
                comps = components(lambda, mu, options.convention);
            } catch (const ConsistencyError& e) {
                purity.fail({{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"error", e.what()}});
            }
            for (const auto& c : comps) {
                const auto p0 = associated_permutation(c.highest.left, c.highest.right);
                for (const auto& t : c.members) {
                    const auto p = associated_permutation(t.left, t.right);
                    purity.check(p == p0, [&] {
                        return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"highest", to_json(c.highest)},
                                    {"p_highest", to_json(p0)},  {"pair", to_json(t)}, {"p_pair", to_json(p)}};
                    });
                }
            }

            // Associated permutation from extreme directions.
            const auto& atlas_l = atlases.at(lambda);
            const auto& atlas_m = atlases.at(mu);
            for (const auto& t : pairs) {
                const auto tau_hat = atlas_l.max_opposite_index(t.left);
                const auto phi_tilde = atlas_m.min_demazure_index(t.right);
                const auto p = associated_permutation(t.left, t.right);
                direction_formula.check(tau_hat && phi_tilde && kk_direction_formula(*tau_hat, *phi_tilde) == p,
                                        [&] { return json{{"pair", to_json(t)}, {"p", to_json(p)}}; });
            }

            // Character endpoints.
            auto char_of = [&](const std::vector<TensorElement>& members) {
                CharPoly ch(n);
                for (const auto& t : members) ch.add_term(weight(t), 1);
                return ch;
            };
            const auto bottom = char_of(kks.at(identity(n)).members);
            const auto top = char_of(kks.at(w0).members);
            endpoints.check(bottom == schur(lambda + mu) && top == schur(lambda) * schur(mu), [&] {
                return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
            });

            const auto cart = cartan_component(lambda, mu, kk_opts);
            cartan.check(cart == kks.at(identity(n)).members && char_of(cart) == schur(lambda + mu),
                         [&] { return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}}; });

            // Filtration and multiplicity monotonicity.
            std::map<Permutation, std::map<Weight, std::int64_t>> mults;
            if (!comps.empty()) {
                for (const auto& w : group) {
                    try {
                        mults.emplace(w, decompose(comps, kks.at(w)));
                    } catch (const ConsistencyError& e) {
                        multiplicities.fail({{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"w", to_json(w)},
                                             {"error", e.what()}});
                    }
                }
            }
            for (const auto& u : group) {
                for (const auto& v : group) {
                    if (!bruhat_leq(u, v)) continue;
                    const auto& a = kks.at(u).members;
                    const auto& b = kks.at(v).members;
                    filtration.check(std::includes(b.begin(), b.end(), a.begin(), a.end()), [&] {
                        return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"u", to_json(u)},
                                    {"v", to_json(v)}};
                    });
                    if (mults.count(u) && mults.count(v)) {
                        bool ok = true;
                        for (const auto& [hw, m] : mults.at(u)) {
                            auto it = mults.at(v).find(hw);
                            ok = ok && it != mults.at(v).end() && it->second >= m;
                        }
                        multiplicities.check(ok, [&] {
                            return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"u", to_json(u)},
                                        {"v", to_json(v)}};
                        });
                    }
                }
            }

            // BiKogan faces.
            for (const auto& w : group) {
                const auto v = compose(w, w0);
                const auto faces = reduced_bifaces(v);
                const auto unioned = bikogan_union_points(lambda, mu, v, {options.threads, kDefaultPairLimit});
                const auto& members = kks.at(w).members;
                bikogan.check(unioned == members, [&] {
                    json missing = json::array();
                    for (const auto& t : members)
                        if (!contains(unioned, t) && missing.size() < 5) missing.push_back(to_json(t));
                    return json{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"w", to_json(w)},
                                {"union_size", unioned.size()}, {"kk_size", members.size()},
                                {"without_witness", missing}};
                });
                for (const auto& f : faces) {
                    for (const auto& t : pairs) {
                        if (!f.contains(t)) continue;
                        const auto dp = demazure_product(pair_word(t.left, t.right));
                        face_bound.check(bruhat_leq(v, dp), [&] {
                            return json{{"face", to_json(f)}, {"pair", to_json(t)}};
                        });
                    }
                }
            }
        }
    }

    VerifyReport report;
    report.options = options;
    for (Property* p : {&dp_bounds, &oracle, &axioms, &bridge, &fujita, &fujita_dual, &directions, &initial_dir,
                        &final_dir, &closure, &purity, &direction_formula, &endpoints, &cartan, &filtration,
                        &multiplicities, &bikogan, &face_bound})
        report.properties.push_back(p->finish());
    return report;
}

}  // namespace gtkk
