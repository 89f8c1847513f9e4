#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multinet/arrangement.hpp"
#include "multinet/completeness.hpp"
#include "multinet/induce.hpp"

namespace multinet {

/// Everything the verify, classify and complete commands report about one
/// arrangement. Fields that depend on the arrangement being a multinet are
/// empty otherwise.
struct VerdictDocument {
  bool is_multinet = false;
  int k = 0;
  int d = 0;
  bool axiom_i = false;
  std::vector<bool> axiom_ii;
  std::optional<std::string> unbalanced_point;
  std::optional<WeightClass> weight;
  long base_points = 0;
  long offbase_points = 0;
  std::vector<std::string> block_structures;  // "SingleLine" for one-line blocks

  std::optional<RHBalance> e1;
  std::optional<Eq2Balance> e2;  // k = 3 only
  std::optional<bool> complete;  // empty when d < 2 or not a multinet
  std::vector<LocalPoint> local_failures;
  std::optional<bool> local_pass;

  std::optional<InducedType> induced;
  std::vector<MultiLine> canceled;  // induce only

  std::string verdict() const { return is_multinet ? "multinet" : "not a multinet"; }
  /// "complete", "incomplete", "NotApplicable" (d < 2) or "not a multinet".
  std::string completeness() const;

  nlohmann::ordered_json to_json() const;
  /// Line-oriented rendering of to_json(); carries exactly the same data.
  std::string to_text() const;
};

VerdictDocument build_verdict(const MultinetCandidate& a);
VerdictDocument build_verdict(const InducedResult& r);

}  // namespace multinet
