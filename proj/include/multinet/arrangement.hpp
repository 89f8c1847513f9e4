#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multinet/projgeom.hpp"

namespace multinet {

struct MultiLine {
  ProjLine line;
  int mult = 1;
};

/// A multi-arrangement of lines partitioned into k >= 3 blocks. All lines are
/// stored lifted to the candidate's conductor.
class MultinetCandidate {
 public:
  struct Entry {
    ProjLine line;
    int mult;
    int block;
  };

  /// Throws InvalidCandidate if k < 3, a block is empty, a multiplicity is
  /// not positive, two lines coincide, or a line does not live at `conductor`.
  MultinetCandidate(int conductor, std::vector<std::vector<MultiLine>> blocks);

  int conductor() const { return conductor_; }
  int k() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<MultiLine>>& blocks() const { return blocks_; }

  /// Flattened view, blocks in order.
  const std::vector<Entry>& lines() const { return lines_; }
  std::size_t line_count() const { return lines_.size(); }
  /// Indices into lines() for block b.
  const std::vector<int>& block_indices(int b) const { return block_index_[b]; }
  int block_weight(int b) const;

  /// Copy with the multiplicity of line `index` of block `block` replaced.
  MultinetCandidate with_multiplicity(int block, int index, int mult) const;

 private:
  int conductor_;
  std::vector<std::vector<MultiLine>> blocks_;
  std::vector<Entry> lines_;
  std::vector<std::vector<int>> block_index_;
};

struct BasePoint {
  ProjPoint point;
  std::vector<int> per_block_sum;  // sum of m(l) over block-i lines through the point
  int n_p = 0;                     // common value when balanced, otherwise the max
  bool balanced = false;
  std::vector<int> lines;          // indices into MultinetCandidate::lines()
};

struct OffBasePoint {
  ProjPoint point;
  int m_p = 0;  // distinct lines through the point
  int block = 0;
  std::vector<int> lines;
};

/// Partition of the intersection points into the base locus and the rest.
struct BaseAnalysis {
  std::vector<BasePoint> base;
  std::vector<OffBasePoint> offbase;
  std::vector<std::vector<int>> per_line;          // base point indices on each line
  std::vector<std::vector<int>> per_line_offbase;  // off-base point indices on each line
  int d = 0;
  int k = 0;

  /// Index into base, or -1.
  int find_base(const ProjPoint& p) const;
};

BaseAnalysis analyze(const MultinetCandidate& a);

struct VerificationReport {
  bool axiom_i = false;
  std::optional<ProjPoint> first_offender;  // first unbalanced base point
  std::vector<bool> axiom_ii;               // connectivity per block
  int d = 0;
  int k = 0;
  bool is_multinet = false;
};

VerificationReport verify_multinet(const MultinetCandidate& a);
VerificationReport verify_multinet(const MultinetCandidate& a, const BaseAnalysis& analysis);

struct PropertyReport {
  std::vector<int> block_weights;
  bool item1 = false;  // every block weight equals d
  long total_weight = 0;
  bool item2 = false;  // total weight equals dk
  long sum_np_squared = 0;
  bool item3 = false;  // Bezout
  bool item4 = false;  // sum of n_p along each line equals d
  std::optional<int> item4_offender;

  bool all() const { return item1 && item2 && item3 && item4; }
};

/// Throws NotAMultinet.
PropertyReport property_checks(const MultinetCandidate& a);

enum class WeightClass { Net, ProperLight, ProperHeavy };
std::string to_string(WeightClass w);

/// Throws NotAMultinet.
WeightClass weight_classify(const MultinetCandidate& a);
WeightClass weight_classify(const MultinetCandidate& a, const BaseAnalysis& analysis);

enum class BlockStructure { Pencil, GeneralPosition, Easel, Other };
std::string to_string(BlockStructure s);

/// Concurrency pattern of the lines of block i (multiplicities ignored).
/// Easel applies to four-line blocks only. Throws TooFewLines for a one-line
/// block.
BlockStructure block_structure(const MultinetCandidate& a, int block);

struct LatinSquare {
  int d = 0;
  std::vector<std::vector<int>> cells;  // entries 1..d

  bool is_latin() const;
  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;
};

enum class LineOrder {
  Canonical,  // lines sorted by canonical coordinate string within each block
  AsGiven,
};

/// cells[i][j] = k where line i of block 1 meets line j of block 2 on line k
/// of block 3. Throws NotANet or NotThreeBlocks.
LatinSquare extract_latin(const MultinetCandidate& a, LineOrder order = LineOrder::Canonical);

struct GroupSpec {
  enum class Family { Cyclic, Klein, Dihedral };
  Family family = Family::Cyclic;
  int n = 1;  // cyclic: order n; dihedral: order 2n

  int order() const;
  std::string str() const;
  /// "cyclic:N", "klein" or "dihedral:N". Throws UnsupportedGroup.
  static GroupSpec parse(const std::string& text);
};

/// Cayley table with the identity first. Throws UnsupportedGroup above order 12.
LatinSquare group_table(const GroupSpec& g);

/// Brute force over row and column permutations. Throws OrderTooLarge for
/// d > 6 and OrderMismatch if the orders differ.
bool isotopic_to_group(const LatinSquare& square, const GroupSpec& g);
bool isotopic(const LatinSquare& a, const LatinSquare& b);

/// A projectivity carrying a onto b, lines with multiplicities and blocks up
/// to a permutation of blocks, or nullopt. Throws TooLarge above 30 lines.
std::optional<Projectivity> is_projectively_equivalent(const MultinetCandidate& a,
                                                      const MultinetCandidate& b);

/// Applies t to every line, keeping blocks and multiplicities.
MultinetCandidate transform(const MultinetCandidate& a, const Projectivity& t);

}  // namespace multinet
