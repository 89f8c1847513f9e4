#pragma once

#include <array>
#include <vector>

#include "multinet/arrangement.hpp"

namespace multinet {

/// Parameters of the two-parameter families.
struct FamilyParams {
  Cyclo lambda;
  Cyclo mu;
};

/// Blocks {x - z y}, {x - z z}, {y - z z} with z over the n-th roots of unity.
MultinetCandidate fermat(int n);

/// [x^n (y^n - z^n)][y^n (x^n - z^n)][z^n (x^n - y^n)]: each block holds a
/// coordinate line of multiplicity n and n simple lines.
MultinetCandidate monomial_g_n13(int n);

/// The four completely reducible fibers of the pencil spanned by xyz and
/// x^3 + y^3 + z^3, at conductor 3.
MultinetCandidate hesse();

/// Nine-line (3,3) family with A_1 the coordinate triangle. Throws
/// InvalidParams unless lambda, mu are not 0 or 1 and lambda != mu.
MultinetCandidate stipins33(const FamilyParams& p);

/// Twelve-line light (3,4) family with its double point at [1:0:0]. Throws
/// InvalidParams unless additionally lambda * mu != 1.
MultinetCandidate light34(const FamilyParams& p);

/// The (3,4)-net realizing Z/2 x Z/2 in the labeling l_11 ... l_34.
MultinetCandidate z2z2_net();

/// k concurrent lines through [0:0:1], one per block.
MultinetCandidate trivial_pencil(int k);

struct Hyperplane {
  Vec4 coords;
  int half = 0;                 // 0 or 1 within its block
  std::array<int, 2> base{};    // the two coordinates vanishing on the half-block base
};

/// Hyperplanes of P^3 grouped into three blocks.
struct Hyper3Arrangement {
  int conductor = 1;
  std::array<std::vector<Hyperplane>, 3> blocks;
};

/// Q_n: blocks [(x0^n - x1^n)(x2^n - x3^n)], [(x0^n - x2^n)(x1^n - x3^n)],
/// [(x0^n - x3^n)(x1^n - x2^n)], each factor a half-block of n hyperplanes.
Hyper3Arrangement qn_in_p3(int n);

}  // namespace multinet
