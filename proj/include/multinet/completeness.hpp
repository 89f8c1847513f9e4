#pragma once

#include <optional>
#include <vector>

#include "multinet/arrangement.hpp"

namespace multinet {

/// Both sides of the Riemann-Hurwitz type inequality
///   3 + |X| >= (2-k)[3d - d^2 + sum_X (n_p^2 - n_p)] + 2|A| - sum_Xbar (m_p - 1)
/// where |A| counts distinct lines and m_p counts distinct lines through p.
struct RHBalance {
  long lhs = 0;
  long rhs = 0;
  int k = 0;
  int d = 0;
  long line_count = 0;
  long base_count = 0;
  long sum_np_sq_minus_np = 0;  // sum over X of n_p^2 - n_p
  long sum_mp_minus_one = 0;    // sum over Xbar of m_p - 1

  bool equality() const { return lhs == rhs; }
};

/// Throws NotAMultinet.
RHBalance rh_balance(const MultinetCandidate& a);

/// Throws NotAMultinet, or DegreeTooSmall when d < 2.
bool is_complete(const MultinetCandidate& a);

/// The k = 3 form, computed on its own:
///   lhs = sum_Xbar (m_p - 1),  rhs = 2|A| - |X| - 3(d+1) + sum_X n_p.
struct Eq2Balance {
  long lhs = 0;
  long rhs = 0;
};

/// Throws WrongK unless k = 3, NotAMultinet.
Eq2Balance eq2_balance(const MultinetCandidate& a);

struct LocalPoint {
  ProjPoint point;
  int n_p = 0;
  int lines_through = 0;  // |A_p|
  long lhs = 0;           // 2 n_p - 2
  long rhs = 0;           // sum over A_p of m(l) - 1
  bool pass = false;
};

struct LocalReport {
  std::vector<LocalPoint> points;
  bool global_pass = false;

  std::vector<LocalPoint> failures() const;
};

/// Per base point check 2n_p - 2 = sum (m(l) - 1). For k = 3 the equivalent
/// form |A_p| = n_p + 2 is evaluated as well and must agree. Throws
/// NotAMultinet.
LocalReport local_test(const MultinetCandidate& a);

struct StructureCertificate {
  std::vector<BlockStructure> blocks;  // all Pencil
  Projectivity to_fermat;              // carries the net onto fermat(d)
};

/// For a complete 3-net: every block is a pencil and the net is projectively
/// equivalent to the Fermat arrangement of the same degree. Throws
/// NotComplete if the input is not a complete 3-net, and TheoremViolation if
/// the structure does not hold.
StructureCertificate complete_3net_structure(const MultinetCandidate& a);

}  // namespace multinet
