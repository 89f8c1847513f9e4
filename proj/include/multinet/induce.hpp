#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "multinet/arrangement.hpp"
#include "multinet/catalog.hpp"

namespace multinet {

/// Identifies the plane h.x = 0 of P^3 with P^2. With i the first nonzero
/// coordinate, the basis points are e_j - (h_j / h_i) e_i for j != i.
/// Throws ZeroPlane.
Plane3 plane_basis(const Vec4& h);

/// One completely reducible fiber of the induced pencil, as lines in the
/// plane's frame with accumulated multiplicities.
struct RestrictedFiber {
  std::vector<MultiLine> lines;

  int total() const;
};

/// Throws PlaneInArrangement if some hyperplane of q restricts to zero.
std::array<RestrictedFiber, 3> restrict_arrangement(const Hyper3Arrangement& q, const Plane3& plane);

struct CanceledFibers {
  std::array<RestrictedFiber, 3> fibers;
  std::vector<MultiLine> canceled;  // removed from every fiber
};

/// Removes the lines common to all three fibers, each with its minimum
/// multiplicity. Throws EverythingCanceled if nothing is left.
CanceledFibers cancel_fixed(std::array<RestrictedFiber, 3> fibers);

struct InducedResult {
  /// Absent only when a line survives in two different fibers after
  /// cancellation, which cannot be assembled into blocks.
  std::optional<MultinetCandidate> arrangement;
  std::array<RestrictedFiber, 3> fibers;
  std::vector<MultiLine> canceled;
  Plane3 plane;
  int n = 0;
  int degree = 0;  // 2n minus the canceled multiplicity
};

/// Restriction of Q_n to the plane h, with fixed components canceled.
InducedResult induce(int n, const Vec4& h);

enum class InducedTag { T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, Trivial, Unknown };
std::string to_string(InducedTag tag);

struct InducedType {
  InducedTag tag = InducedTag::Unknown;
  std::string evidence;
};

/// Matches the induced arrangement against the ten combinatorial types of
/// multinets induced from Q_n, using n, d, the line multiplicities, the base
/// point multiplicities and the weight class.
InducedType classify_induced(const InducedResult& r);

}  // namespace multinet
