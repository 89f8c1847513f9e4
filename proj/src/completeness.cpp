#include "multinet/completeness.hpp"

#include "multinet/catalog.hpp"
#include "multinet/error.hpp"

namespace multinet {

namespace {

BaseAnalysis verified_analysis(const MultinetCandidate& a) {
  BaseAnalysis analysis = analyze(a);
  if (!verify_multinet(a, analysis).is_multinet) throw Error(ErrorKind::NotAMultinet, "input is not a multinet");
  return analysis;
}

RHBalance rh_from(const MultinetCandidate& a, const BaseAnalysis& an) {
  RHBalance r;
  r.k = an.k;
  r.d = an.d;
  r.line_count = static_cast<long>(a.line_count());
  r.base_count = static_cast<long>(an.base.size());
  for (const auto& bp : an.base) r.sum_np_sq_minus_np += static_cast<long>(bp.n_p) * bp.n_p - bp.n_p;
  for (const auto& op : an.offbase) r.sum_mp_minus_one += op.m_p - 1;
  const long d = r.d;
  r.lhs = 3 + r.base_count;
  r.rhs = (2 - r.k) * (3 * d - d * d + r.sum_np_sq_minus_np) + 2 * r.line_count - r.sum_mp_minus_one;
  return r;
}

}  // namespace

RHBalance rh_balance(const MultinetCandidate& a) { return rh_from(a, verified_analysis(a)); }

bool is_complete(const MultinetCandidate& a) {
  const BaseAnalysis an = verified_analysis(a);
  if (an.d < 2) throw Error(ErrorKind::DegreeTooSmall, "completeness is defined for d >= 2");
  return rh_from(a, an).equality();
}

Eq2Balance eq2_balance(const MultinetCandidate& a) {
  if (a.k() != 3) throw Error(ErrorKind::WrongK, "the k = 3 balance needs three blocks");
  const BaseAnalysis an = verified_analysis(a);
  Eq2Balance e;
  for (const auto& op : an.offbase) e.lhs += op.m_p - 1;
  long sum_np = 0;
  for (const auto& bp : an.base) sum_np += bp.n_p;
  e.rhs = 2 * static_cast<long>(a.line_count()) - static_cast<long>(an.base.size()) - 3 * (an.d + 1) + sum_np;
  return e;
}

std::vector<LocalPoint> LocalReport::failures() const {
  std::vector<LocalPoint> out;
  for (const auto& p : points)
    if (!p.pass) out.push_back(p);
  return out;
}

LocalReport local_test(const MultinetCandidate& a) {
  const BaseAnalysis an = verified_analysis(a);
  LocalReport report;
  report.global_pass = true;
  for (const auto& bp : an.base) {
    LocalPoint lp{bp.point, bp.n_p, static_cast<int>(bp.lines.size()), 2L * bp.n_p - 2, 0, false};
    for (int li : bp.lines) lp.rhs += a.lines()[li].mult - 1;
    lp.pass = lp.lhs == lp.rhs;
    if (a.k() == 3) {
      const bool short_form = lp.lines_through == bp.n_p + 2;
      if (short_form != lp.pass)
        throw Error(ErrorKind::TheoremViolation, "local test forms disagree at " + bp.point.key());
    }
    report.global_pass = report.global_pass && lp.pass;
    report.points.push_back(std::move(lp));
  }
  return report;
}

StructureCertificate complete_3net_structure(const MultinetCandidate& a) {
  if (a.k() != 3) throw Error(ErrorKind::NotComplete, "not a 3-net");
  const BaseAnalysis an = verified_analysis(a);
  if (an.d < 2 || weight_classify(a, an) != WeightClass::Net || !rh_from(a, an).equality())
    throw Error(ErrorKind::NotComplete, "not a complete 3-net");

  std::vector<BlockStructure> blocks;
  for (int b = 0; b < 3; ++b) {
    blocks.push_back(block_structure(a, b));
    if (blocks.back() != BlockStructure::Pencil)
      throw Error(ErrorKind::TheoremViolation,
                  "complete 3-net with block " + std::to_string(b + 1) + " " + to_string(blocks.back()));
  }
  auto t = is_projectively_equivalent(a, fermat(an.d));
  if (!t) throw Error(ErrorKind::TheoremViolation, "complete 3-net not equivalent to the Fermat arrangement");
  return {std::move(blocks), *t};
}

}  // namespace multinet
