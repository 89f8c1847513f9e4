#include "multinet/report.hpp"

#include <sstream>

#include "multinet/error.hpp"

namespace multinet {

using json = nlohmann::ordered_json;

namespace {

std::string structure_name(const MultinetCandidate& a, int b) {
  if (a.blocks()[b].size() == 1) return "SingleLine";
  return to_string(block_structure(a, b));
}

json line_json(const MultiLine& ml) {
  return {{"line", ml.line.key()}, {"mult", ml.mult}};
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    if (j.empty()) {
      out << prefix << ": (none)\n";
      return;
    }
    bool scalars = true;
    for (const auto& e : j) scalars = scalars && !e.is_structured();
    if (scalars) {
      out << prefix << ":";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : " ") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      out << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string VerdictDocument::completeness() const {
  if (!is_multinet) return "not a multinet";
  if (!complete) return "NotApplicable";
  return *complete ? "complete" : "incomplete";
}

json VerdictDocument::to_json() const {
  json j;
  j["verdict"] = verdict();
  j["k"] = k;
  j["d"] = d;
  j["axiom_i"] = axiom_i;
  j["axiom_ii"] = axiom_ii;
  if (unbalanced_point) j["unbalanced_point"] = *unbalanced_point;
  j["weight_class"] = weight ? json(to_string(*weight)) : json(nullptr);
  j["base_points"] = base_points;
  j["offbase_points"] = offbase_points;
  j["block_structures"] = block_structures;

  json c;
  c["status"] = completeness();
  if (e1) c["E1"] = {{"lhs", e1->lhs}, {"rhs", e1->rhs}, {"equality", e1->equality()}};
  if (e2) c["E2"] = {{"lhs", e2->lhs}, {"rhs", e2->rhs}};
  j["completeness"] = std::move(c);

  if (local_pass) {
    json failures = json::array();
    for (const auto& p : local_failures)
      failures.push_back({{"point", p.point.key()},
                          {"n_p", p.n_p},
                          {"lines_through", p.lines_through},
                          {"lhs", p.lhs},
                          {"rhs", p.rhs}});
    j["local_test"] = {{"pass", *local_pass}, {"failures", std::move(failures)}};
  }

  if (induced) {
    json canceled_lines = json::array();
    for (const auto& ml : canceled) canceled_lines.push_back(line_json(ml));
    j["induced"] = {{"type", to_string(induced->tag)}, {"evidence", induced->evidence}, {"canceled", canceled_lines}};
  }
  return j;
}

std::string VerdictDocument::to_text() const {
  std::ostringstream out;
  flatten(to_json(), "", out);
  return out.str();
}

VerdictDocument build_verdict(const MultinetCandidate& a) {
  VerdictDocument v;
  const BaseAnalysis an = analyze(a);
  const VerificationReport rep = verify_multinet(a, an);
  v.is_multinet = rep.is_multinet;
  v.k = rep.k;
  v.d = rep.d;
  v.axiom_i = rep.axiom_i;
  v.axiom_ii = rep.axiom_ii;
  if (rep.first_offender) v.unbalanced_point = rep.first_offender->key();
  v.base_points = static_cast<long>(an.base.size());
  v.offbase_points = static_cast<long>(an.offbase.size());
  for (int b = 0; b < a.k(); ++b) v.block_structures.push_back(structure_name(a, b));
  if (!v.is_multinet) return v;

  v.weight = weight_classify(a, an);
  v.e1 = rh_balance(a);
  if (a.k() == 3) v.e2 = eq2_balance(a);
  if (v.d >= 2) v.complete = is_complete(a);
  const LocalReport local = local_test(a);
  v.local_pass = local.global_pass;
  v.local_failures = local.failures();
  return v;
}

VerdictDocument build_verdict(const InducedResult& r) {
  VerdictDocument v;
  if (r.arrangement) {
    v = build_verdict(*r.arrangement);
  } else {
    v.k = 3;
    v.d = r.degree;
  }
  v.induced = classify_induced(r);
  v.canceled = r.canceled;
  return v;
}

}  // namespace multinet
