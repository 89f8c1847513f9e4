#include "multinet/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "multinet/error.hpp"

namespace multinet {

MultinetCandidate::MultinetCandidate(int conductor, std::vector<std::vector<MultiLine>> blocks)
    : conductor_(conductor), blocks_(std::move(blocks)) {
  if (conductor_ < 1) throw Error(ErrorKind::InvalidCandidate, "conductor must be positive");
  if (blocks_.size() < 3)
    throw Error(ErrorKind::InvalidCandidate, "need at least 3 blocks, got " + std::to_string(blocks_.size()));
  std::map<std::string, int> seen;
  block_index_.resize(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw Error(ErrorKind::InvalidCandidate, "block " + std::to_string(b + 1) + " is empty");
    for (auto& ml : blocks_[b]) {
      if (ml.mult < 1) throw Error(ErrorKind::InvalidCandidate, "multiplicity must be positive for " + ml.line.key());
      if (conductor_ % ml.line.conductor() != 0)
        throw Error(ErrorKind::InvalidCandidate,
                    ml.line.key() + " does not live at conductor " + std::to_string(conductor_));
      ml.line = ml.line.lifted(conductor_);
      auto [it, fresh] = seen.emplace(ml.line.key(), static_cast<int>(b));
      if (!fresh) throw Error(ErrorKind::InvalidCandidate, "duplicated line " + ml.line.key());
      block_index_[b].push_back(static_cast<int>(lines_.size()));
      lines_.push_back({ml.line, ml.mult, static_cast<int>(b)});
    }
  }
}

int MultinetCandidate::block_weight(int b) const {
  int w = 0;
  for (const auto& ml : blocks_[b]) w += ml.mult;
  return w;
}

MultinetCandidate MultinetCandidate::with_multiplicity(int block, int index, int mult) const {
  auto copy = blocks_;
  copy.at(block).at(index).mult = mult;
  return MultinetCandidate(conductor_, std::move(copy));
}

int BaseAnalysis::find_base(const ProjPoint& p) const {
  auto it = std::lower_bound(base.begin(), base.end(), p,
                             [](const BasePoint& bp, const ProjPoint& q) { return bp.point.key() < q.key(); });
  if (it != base.end() && it->point == p) return static_cast<int>(it - base.begin());
  return -1;
}

BaseAnalysis analyze(const MultinetCandidate& a) {
  const auto& lines = a.lines();
  const int n = static_cast<int>(lines.size());

  struct Acc {
    ProjPoint point;
    std::vector<int> lines;
  };
  std::map<std::string, Acc> points;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ProjPoint p = meet(lines[i].line, lines[j].line);
      auto it = points.find(p.key());
      if (it == points.end()) it = points.emplace(p.key(), Acc{p, {}}).first;
      it->second.lines.push_back(i);
      it->second.lines.push_back(j);
    }

  BaseAnalysis out;
  out.k = a.k();
  out.d = a.block_weight(0);
  out.per_line.resize(n);
  out.per_line_offbase.resize(n);
  for (auto& [key, acc] : points) {
    std::sort(acc.lines.begin(), acc.lines.end());
    acc.lines.erase(std::unique(acc.lines.begin(), acc.lines.end()), acc.lines.end());

    std::vector<int> sums(a.k(), 0);
    std::vector<bool> present(a.k(), false);
    for (int li : acc.lines) {
      sums[lines[li].block] += lines[li].mult;
      present[lines[li].block] = true;
    }
    const auto blocks_present = std::count(present.begin(), present.end(), true);
    if (blocks_present >= 2) {
      BasePoint bp{acc.point, sums, 0, false, acc.lines};
      bp.balanced = std::all_of(sums.begin(), sums.end(), [&](int s) { return s == sums[0]; });
      bp.n_p = *std::max_element(sums.begin(), sums.end());
      for (int li : acc.lines) out.per_line[li].push_back(static_cast<int>(out.base.size()));
      out.base.push_back(std::move(bp));
    } else {
      OffBasePoint op{acc.point, static_cast<int>(acc.lines.size()), lines[acc.lines.front()].block, acc.lines};
      for (int li : acc.lines) out.per_line_offbase[li].push_back(static_cast<int>(out.offbase.size()));
      out.offbase.push_back(std::move(op));
    }
  }
  return out;
}

VerificationReport verify_multinet(const MultinetCandidate& a) { return verify_multinet(a, analyze(a)); }

VerificationReport verify_multinet(const MultinetCandidate& a, const BaseAnalysis& analysis) {
  VerificationReport report;
  report.k = a.k();
  report.d = analysis.d;

  report.axiom_i = true;
  for (const auto& bp : analysis.base)
    if (!bp.balanced) {
      report.axiom_i = false;
      report.first_offender = bp.point;
      break;
    }

  const auto& lines = a.lines();
  for (int b = 0; b < a.k(); ++b) {
    const auto& idx = a.block_indices(b);
    const std::size_t m = idx.size();
    std::vector<bool> reached(m, false);
    std::queue<std::size_t> todo;
    reached[0] = true;
    todo.push(0);
    while (!todo.empty()) {
      const std::size_t u = todo.front();
      todo.pop();
      for (std::size_t v = 0; v < m; ++v) {
        if (reached[v]) continue;
        if (analysis.find_base(meet(lines[idx[u]].line, lines[idx[v]].line)) >= 0) continue;
        reached[v] = true;
        todo.push(v);
      }
    }
    report.axiom_ii.push_back(std::all_of(reached.begin(), reached.end(), [](bool r) { return r; }));
  }

  report.is_multinet =
      report.axiom_i && std::all_of(report.axiom_ii.begin(), report.axiom_ii.end(), [](bool c) { return c; });
  return report;
}

PropertyReport property_checks(const MultinetCandidate& a) {
  const BaseAnalysis analysis = analyze(a);
  if (!verify_multinet(a, analysis).is_multinet) throw Error(ErrorKind::NotAMultinet, "property checks need a verified multinet");
  const long d = analysis.d;

  PropertyReport r;
  r.item1 = true;
  for (int b = 0; b < a.k(); ++b) {
    r.block_weights.push_back(a.block_weight(b));
    r.item1 = r.item1 && r.block_weights.back() == d;
    r.total_weight += r.block_weights.back();
  }
  r.item2 = r.total_weight == d * a.k();
  for (const auto& bp : analysis.base) r.sum_np_squared += static_cast<long>(bp.n_p) * bp.n_p;
  r.item3 = r.sum_np_squared == d * d;
  r.item4 = true;
  for (std::size_t li = 0; li < a.line_count(); ++li) {
    long s = 0;
    for (int bi : analysis.per_line[li]) s += analysis.base[bi].n_p;
    if (s != d) {
      r.item4 = false;
      r.item4_offender = static_cast<int>(li);
      break;
    }
  }
  return r;
}

std::string to_string(WeightClass w) {
  switch (w) {
    case WeightClass::Net: return "Net";
    case WeightClass::ProperLight: return "ProperLight";
    case WeightClass::ProperHeavy: return "ProperHeavy";
  }
  return "?";
}

WeightClass weight_classify(const MultinetCandidate& a) { return weight_classify(a, analyze(a)); }

WeightClass weight_classify(const MultinetCandidate& a, const BaseAnalysis& analysis) {
  if (!verify_multinet(a, analysis).is_multinet) throw Error(ErrorKind::NotAMultinet, "weight class needs a verified multinet");
  const auto d = static_cast<std::size_t>(analysis.d);
  if (analysis.base.size() == d * d) return WeightClass::Net;
  const bool heavy = std::any_of(a.lines().begin(), a.lines().end(), [](const auto& e) { return e.mult > 1; });
  return heavy ? WeightClass::ProperHeavy : WeightClass::ProperLight;
}

std::string to_string(BlockStructure s) {
  switch (s) {
    case BlockStructure::Pencil: return "Pencil";
    case BlockStructure::GeneralPosition: return "GeneralPosition";
    case BlockStructure::Easel: return "Easel";
    case BlockStructure::Other: return "Other";
  }
  return "?";
}

BlockStructure block_structure(const MultinetCandidate& a, int block) {
  const auto& idx = a.block_indices(block);
  const auto& lines = a.lines();
  if (idx.size() < 2) throw Error(ErrorKind::TooFewLines, "block " + std::to_string(block + 1) + " has one line");
  if (idx.size() == 2) return BlockStructure::Pencil;

  int concurrent_triples = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      for (std::size_t k = j + 1; k < idx.size(); ++k)
        if (rank_test(lines[idx[i]].line, lines[idx[j]].line, lines[idx[k]].line)) ++concurrent_triples;

  const std::size_t m = idx.size();
  const int all_triples = static_cast<int>(m * (m - 1) * (m - 2) / 6);
  if (concurrent_triples == all_triples) return BlockStructure::Pencil;
  if (concurrent_triples == 0) return BlockStructure::GeneralPosition;
  if (m == 4 && concurrent_triples == 1) return BlockStructure::Easel;
  return BlockStructure::Other;
}

MultinetCandidate transform(const MultinetCandidate& a, const Projectivity& t) {
  std::vector<std::vector<MultiLine>> blocks;
  int conductor = a.conductor();
  for (const auto& block : a.blocks()) {
    auto& out = blocks.emplace_back();
    for (const auto& ml : block) {
      out.push_back({t(ml.line), ml.mult});
      conductor = std::lcm(conductor, out.back().line.conductor());
    }
  }
  return MultinetCandidate(conductor, std::move(blocks));
}

}  // namespace multinet
