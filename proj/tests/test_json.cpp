#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "gtkk/json_io.hpp"

using namespace gtkk;

TEST_CASE("permutation and word round trip") {
    for (const auto& w : all_permutations(4)) {
        const auto j = json::parse(to_json(w).dump());
        CHECK(permutation_from_json(j) == w);
        const auto word = reduced_word(w);
        CHECK(word_from_json(json::parse(to_json(word).dump()), 4) == word);
    }
    CHECK(to_json(Permutation({2, 1, 3})).dump() == "[2,1,3]");
    CHECK_THROWS_AS(permutation_from_json(json::parse("[1,1]")), std::invalid_argument);
    CHECK_THROWS_AS(permutation_from_json(json::parse("{\"a\":1}")), std::invalid_argument);
    CHECK_THROWS_AS(word_from_json(json::parse("[1,\"x\"]"), 3), std::invalid_argument);
    CHECK_THROWS_AS(word_from_json(json::parse("[3]"), 3), std::invalid_argument);
}

TEST_CASE("pattern round trip") {
    const auto p = fixtures::weight_example();
    const auto j = to_json(p);
    CHECK(j.at("n") == 5);
    CHECK(j.at("rows")[0] == json::array({3}));
    CHECK(pattern_from_json(json::parse(j.dump())) == p);
    for (const auto& q : enumerate(Partition{2, 1, 1, 0})) CHECK(pattern_from_json(to_json(q)) == q);
    CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"n":2,"rows":[[1],[1,0],[1,0,0]]})")), std::invalid_argument);
    CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"rows":[[1],[1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(pattern_from_json(json::parse(R"([1])")), std::invalid_argument);
}

TEST_CASE("character round trip") {
    const auto ch = schur(Partition{2, 1, 0});
    const auto j = to_json(ch);
    CHECK(j.size() == 7);
    CHECK(j[0].contains("weight"));
    CHECK(j[0].contains("mult"));
    // Terms are sorted by weight.
    for (std::size_t k = 1; k < j.size(); ++k) CHECK(j[k - 1].at("weight") < j[k].at("weight"));
    CHECK(charpoly_from_json(json::parse(j.dump()), 3) == ch);
    CHECK_THROWS_AS(charpoly_from_json(json::parse(R"([{"weight":[1,0,0]}])"), 3), std::invalid_argument);
}

TEST_CASE("pair and face round trip") {
    const TensorElement t{fixtures::pair_left(), fixtures::pair_right()};
    CHECK(pair_from_json(json::parse(to_json(t).dump())) == t);
    const FaceSpec f(4, FaceKind::SE, {{4, 2}, {2, 1}});
    const auto j = to_json(f);
    CHECK(j.at("kind") == "SE");
    CHECK(face_from_json(json::parse(j.dump()), 4) == f);
    const BiFace b{f, FaceSpec(4, FaceKind::NE, {{3, 1}})};
    const auto bj = to_json(b);
    CHECK(bj.at("se") == j);
    CHECK(face_from_json(bj.at("ne"), 4) == b.ne_part);
    CHECK_THROWS_AS(face_from_json(json::parse(R"({"kind":"XX","pairs":[]})"), 3), std::invalid_argument);
    CHECK_THROWS_AS(face_from_json(json::parse(R"({"kind":"NE","pairs":[[1,2,3]]})"), 3), std::invalid_argument);
}
