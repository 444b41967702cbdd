#include "gtkk/json_io.hpp"

#include <stdexcept>

namespace gtkk {

namespace {

template <typename T>
std::vector<T> int_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
    std::vector<T> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
        out.push_back(x.get<T>());
    }
    return out;
}

}  // namespace

json to_json(const Permutation& w) { return w.images(); }
json to_json(const Word& w) { return w.letters(); }
json to_json(const Partition& p) { return p.parts(); }
json to_json(const Weight& w) { return w.coords; }

json to_json(const GTPattern& p) { return json{{"n", p.size()}, {"rows", p.rows()}}; }

json to_json(const CharPoly& c) {
    json out = json::array();
    for (const auto& [w, m] : c.terms()) out.push_back({{"weight", w.coords}, {"mult", m}});
    return out;
}

json to_json(const TensorElement& t) { return json{{"left", to_json(t.left)}, {"right", to_json(t.right)}}; }

json to_json(const FaceSpec& f) {
    json pairs = json::array();
    for (auto [i, j] : f.pairs()) pairs.push_back({i, j});
    return json{{"kind", f.kind() == FaceKind::NE ? "NE" : "SE"}, {"pairs", pairs}};
}

json to_json(const BiFace& b) { return json{{"se", to_json(b.se_part)}, {"ne", to_json(b.ne_part)}}; }

Permutation permutation_from_json(const json& j) { return Permutation(int_array<int>(j, "permutation")); }

Word word_from_json(const json& j, int n) { return Word(n, int_array<int>(j, "word")); }

GTPattern pattern_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows")) throw std::invalid_argument("pattern must be an object with \"rows\"");
    const auto& rows_json = j.at("rows");
    if (!rows_json.is_array()) throw std::invalid_argument("pattern rows must be an array");
    std::vector<std::vector<Entry>> rows;
    for (const auto& r : rows_json) rows.push_back(int_array<Entry>(r, "pattern row"));
    GTPattern p(rows);
    if (j.contains("n") && j.at("n") != p.size())
        throw std::invalid_argument("pattern \"n\" does not match the number of rows");
    return p;
}

CharPoly charpoly_from_json(const json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("character must be an array of terms");
    CharPoly c(n);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("weight") || !term.contains("mult"))
            throw std::invalid_argument("character term needs \"weight\" and \"mult\"");
        const auto& m = term.at("mult");
        if (!m.is_number_integer()) throw std::invalid_argument("multiplicity must be an integer");
        c.add_term(Weight{int_array<Entry>(term.at("weight"), "weight")}, m.get<std::int64_t>());
    }
    return c;
}

TensorElement pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("left") || !j.contains("right"))
        throw std::invalid_argument("pair needs \"left\" and \"right\"");
    return {pattern_from_json(j.at("left")), pattern_from_json(j.at("right"))};
}

FaceSpec face_from_json(const json& j, int n) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("pairs"))
        throw std::invalid_argument("face needs \"kind\" and \"pairs\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "NE" && kind != "SE") throw std::invalid_argument("face kind must be NE or SE");
    std::vector<IndexPair> pairs;
    for (const auto& p : j.at("pairs")) {
        const auto ij = int_array<int>(p, "face pair");
        if (ij.size() != 2) throw std::invalid_argument("face pair must have two entries");
        pairs.emplace_back(ij[0], ij[1]);
    }
    return FaceSpec(n, kind == "NE" ? FaceKind::NE : FaceKind::SE, std::move(pairs));
}

}  // namespace gtkk
