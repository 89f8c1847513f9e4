#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multinet/arrangement.hpp"

namespace multinet {

/// On-disk form of an arrangement. Every number is a coordinate-expression
/// string; no floating point is ever persisted.
///
///   { "conductor": 3,
///     "blocks": [ [ {"coords": ["1", "0", "-z3"], "mult": 1}, ... ], ... ],
///     "metadata": { "name": "fermat", "params": { "n": "3" } } }
struct ArrangementDocument {
  struct Line {
    std::array<std::string, 3> coords;
    int mult = 1;
    friend bool operator==(const Line&, const Line&) = default;
  };

  int conductor = 1;
  std::vector<std::vector<Line>> blocks;
  std::optional<std::string> name;
  nlohmann::json params = nlohmann::json::object();

  /// Throws ParseError, citing the violated invariant.
  MultinetCandidate to_candidate() const;
  static ArrangementDocument from_candidate(const MultinetCandidate& a, std::optional<std::string> name = {},
                                            nlohmann::json params = nlohmann::json::object());

  nlohmann::json to_json() const;
  /// Throws ParseError on schema violations.
  static ArrangementDocument from_json(const nlohmann::json& j);

  friend bool operator==(const ArrangementDocument&, const ArrangementDocument&) = default;
};

/// Throws IOError or ParseError.
ArrangementDocument load_document(const std::string& path);
/// Throws IOError.
void save_document(const ArrangementDocument& doc, const std::string& path);

}  // namespace multinet
