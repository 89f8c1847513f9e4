#include <algorithm>
#include <numeric>

#include "multinet/arrangement.hpp"
#include "multinet/error.hpp"

namespace multinet {

bool LatinSquare::is_latin() const {
  if (d < 1 || cells.size() != static_cast<std::size_t>(d)) return false;
  for (int i = 0; i < d; ++i) {
    if (cells[i].size() != static_cast<std::size_t>(d)) return false;
    std::vector<bool> in_row(d + 1, false), in_col(d + 1, false);
    for (int j = 0; j < d; ++j) {
      const int r = cells[i][j], c = cells[j][i];
      if (r < 1 || r > d || c < 1 || c > d || in_row[r] || in_col[c]) return false;
      in_row[r] = in_col[c] = true;
    }
  }
  return true;
}

LatinSquare extract_latin(const MultinetCandidate& a, LineOrder order) {
  if (a.k() != 3) throw Error(ErrorKind::NotThreeBlocks, "Latin square needs exactly 3 blocks");
  const BaseAnalysis analysis = analyze(a);
  if (!verify_multinet(a, analysis).is_multinet || weight_classify(a, analysis) != WeightClass::Net)
    throw Error(ErrorKind::NotANet, "Latin square needs a net");

  std::array<std::vector<ProjLine>, 3> blocks;
  for (int b = 0; b < 3; ++b) {
    for (const auto& ml : a.blocks()[b]) blocks[b].push_back(ml.line);
    if (order == LineOrder::Canonical) std::sort(blocks[b].begin(), blocks[b].end());
  }

  LatinSquare square;
  square.d = analysis.d;
  square.cells.assign(square.d, std::vector<int>(square.d, 0));
  for (int i = 0; i < square.d; ++i)
    for (int j = 0; j < square.d; ++j) {
      const ProjPoint p = meet(blocks[0][i], blocks[1][j]);
      for (int k = 0; k < square.d; ++k)
        if (incident(p, blocks[2][k])) {
          square.cells[i][j] = k + 1;
          break;
        }
    }
  return square;
}

int GroupSpec::order() const { return family == Family::Klein ? 4 : family == Family::Dihedral ? 2 * n : n; }

std::string GroupSpec::str() const {
  switch (family) {
    case Family::Cyclic: return "cyclic:" + std::to_string(n);
    case Family::Klein: return "klein";
    case Family::Dihedral: return "dihedral:" + std::to_string(n);
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& text) {
  if (text == "klein") return {Family::Klein, 2};
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string name = text.substr(0, colon);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1) {
      if (name == "cyclic") return {Family::Cyclic, n};
      if (name == "dihedral") return {Family::Dihedral, n};
    }
  }
  throw Error(ErrorKind::UnsupportedGroup, "unknown group '" + text + "' (use cyclic:N, klein, dihedral:N)");
}

LatinSquare group_table(const GroupSpec& g) {
  const int order = g.order();
  if (g.n < 1 || order > 12) throw Error(ErrorKind::UnsupportedGroup, g.str() + " has order above 12");
  LatinSquare t;
  t.d = order;
  t.cells.assign(order, std::vector<int>(order, 0));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int z = 0;
      switch (g.family) {
        case GroupSpec::Family::Cyclic: z = (x + y) % order; break;
        case GroupSpec::Family::Klein: z = x ^ y; break;
        case GroupSpec::Family::Dihedral: {
          // element r^a s^b stored at a + n*b; s r^c = r^-c s
          const int n = g.n;
          const int a = x % n, b = x / n, c = y % n, e = y / n;
          const int rot = ((b == 0 ? a + c : a - c) % n + n) % n;
          z = rot + n * ((b + e) % 2);
          break;
        }
      }
      t.cells[x][y] = z + 1;
    }
  return t;
}

bool isotopic(const LatinSquare& a, const LatinSquare& b) {
  if (a.d != b.d) return false;
  const int d = a.d;
  std::vector<int> rows(d), cols(d), symbol(d + 1);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      // first row of the permuted square fixes the symbol map
      for (int j = 0; j < d; ++j) symbol[a.cells[rows[0]][cols[j]]] = b.cells[0][j];
      bool ok = true;
      for (int i = 1; i < d && ok; ++i)
        for (int j = 0; j < d && ok; ++j) ok = symbol[a.cells[rows[i]][cols[j]]] == b.cells[i][j];
      if (ok) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return false;
}

bool isotopic_to_group(const LatinSquare& square, const GroupSpec& g) {
  if (square.d > 6) throw Error(ErrorKind::OrderTooLarge, "isotopy check is limited to order 6");
  if (square.d != g.order())
    throw Error(ErrorKind::OrderMismatch,
                "square of order " + std::to_string(square.d) + " vs " + g.str());
  return isotopic(square, group_table(g));
}

}  // namespace multinet
