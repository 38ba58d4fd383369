#pragma once

// JSON encodings of the core value types:
//   Permutation      [int, ...]
//   Tableau          {"rows": [[int, ...], ...]}
//   BbsConfiguration {"offset": int, "cells": [int | null, ...]}

#include <string>
#include <vector>

#include "json.hpp"

#include "boxball/core.hpp"

namespace boxball {

using json = nlohmann::json;

inline json to_json(const Permutation& w) { return json(w.word()); }

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const Tableau& t) { return json{{"rows", t.rows()}}; }

inline json to_json(const BbsConfiguration& x) {
  json cells = json::array();
  for (int v : x.cells()) cells.push_back(v == BbsConfiguration::kEmpty ? json(nullptr) : json(v));
  return json{{"offset", x.offset()}, {"cells", std::move(cells)}};
}

inline Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "permutation must be a JSON array");
  std::vector<int> word;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "permutation entries must be integers");
    word.push_back(v.get<int>());
  }
  return Permutation(std::move(word));
}

inline Tableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw Error(ErrorCode::ParseError, "tableau must be {\"rows\": [[...]]}");
  std::vector<Tableau::Row> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) throw Error(ErrorCode::ParseError, "tableau row must be an array");
    Tableau::Row row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "tableau entries must be integers");
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return Tableau(std::move(rows));
}

inline BbsConfiguration configuration_from_json(const json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("cells") || !j["offset"].is_number_integer() ||
      !j["cells"].is_array())
    throw Error(ErrorCode::ParseError, "configuration must be {\"offset\": int, \"cells\": [...]}");
  std::vector<std::optional<int>> cells;
  for (const auto& v : j["cells"]) {
    if (v.is_null())
      cells.emplace_back(std::nullopt);
    else if (v.is_number_integer())
      cells.emplace_back(v.get<int>());
    else
      throw Error(ErrorCode::ParseError, "cells must be integers or null");
  }
  return BbsConfiguration::from_optional_cells(j["offset"].get<BbsConfiguration::Box>(), cells);
}

/// Parses JSON text, mapping syntax errors to PARSE_ERROR.
inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace boxball
