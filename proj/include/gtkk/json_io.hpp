#pragma once

// JSON schemas:
//   permutation  [2,1,3]                      (one-line, 1-based images)
//   word         [1,2,1]                      (simple reflection indices)
//   pattern      {"n":3,"rows":[[1],[1,0],[1,0,0]]}
//   character    [{"weight":[1,0,0],"mult":1}, ...]   (sorted by weight)
//   pair         {"left":pattern,"right":pattern}
//   face         {"kind":"NE"|"SE","pairs":[[i,j],...]}
//   biface       {"se":face,"ne":face}

#include "gtkk/charpoly.hpp"
#include "gtkk/crystal.hpp"
#include "gtkk/gt.hpp"
#include "gtkk/kogan.hpp"
#include "gtkk/perm.hpp"

#include <json.hpp>

namespace gtkk {

using json = nlohmann::json;

json to_json(const Permutation& w);
json to_json(const Word& w);
json to_json(const Partition& p);
json to_json(const Weight& w);
json to_json(const GTPattern& p);
json to_json(const CharPoly& c);
json to_json(const TensorElement& t);
json to_json(const FaceSpec& f);
json to_json(const BiFace& b);

/// Each parser throws std::invalid_argument on schema violations.
Permutation permutation_from_json(const json& j);
Word word_from_json(const json& j, int n);
GTPattern pattern_from_json(const json& j);
CharPoly charpoly_from_json(const json& j, int n);
TensorElement pair_from_json(const json& j);
FaceSpec face_from_json(const json& j, int n);

}  // namespace gtkk
