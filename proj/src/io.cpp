#include "reidem/io.hpp"

#include <fstream>
#include <limits>

namespace reidem {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

FiniteGroup finite_group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
    throw InputError("group file needs 'order' and 'table'");
  }
  int order = j.at("order").get<int>();
  std::vector<int> table;
  const Json& t = j.at("table");
  if (!t.is_array()) throw InputError("'table' must be an array");
  for (const Json& row : t) {
    if (row.is_array()) {
      for (const Json& v : row) table.push_back(v.get<int>());
    } else {
      table.push_back(row.get<int>());
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return FiniteGroup(order, std::move(table), std::move(names));
}

Json finite_group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["table"] = g.table();
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

FiniteEndomorphism finite_endomorphism_from_json(const Json& j, const FiniteGroup& group) {
  if (!j.is_object() || !j.contains("map")) throw InputError("endomorphism file needs 'map'");
  return FiniteEndomorphism(group, j.at("map").get<std::vector<int>>());
}

FreeEndomorphism free_endomorphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("images")) {
    throw InputError("endomorphism file needs 'rank' and 'images'");
  }
  Alphabet alphabet(j.at("rank").get<int>());
  auto parse_list = [&](const Json& arr) {
    std::vector<Word> words;
    for (const Json& s : arr) words.push_back(parse_word(alphabet, s.get<std::string>()));
    return words;
  };
  std::vector<Word> images = parse_list(j.at("images"));
  if (j.contains("inverse_images") && !j.at("inverse_images").is_null()) {
    return FreeEndomorphism(alphabet, std::move(images), parse_list(j.at("inverse_images")));
  }
  return FreeEndomorphism(alphabet, std::move(images));
}

IntegerMatrix integer_matrix_from_json(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("matrix")) throw InputError("matrix file needs 'matrix'");
    rows = &j.at("matrix");
  }
  if (!rows->is_array() || rows->empty()) throw InputError("matrix must be a nonempty array");
  int r = static_cast<int>(rows->size());
  int c = -1;
  for (const Json& row : *rows) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    if (c < 0) c = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != c) throw InputError("ragged matrix");
  }
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < c; ++k) m.at(i, k) = (*rows)[i][k].get<long long>();
  }
  return m;
}

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

Json invariant_to_json(const ClassInvariant& inv) {
  Json coords = Json::array();
  for (const Integer& c : inv.coords) coords.push_back(integer_to_json(c));
  return coords;
}

}  // namespace reidem
