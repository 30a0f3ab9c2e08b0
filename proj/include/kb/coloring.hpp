#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kb/rational.hpp"

namespace kb {

enum class BasisId { T, Tprime, Y };

/// Which cell of a basis partition a coloring belongs to.
/// Section-2 layout uses TypeI/TypeII/TypeIII; the finer layout uses the
/// four two-sided cells at the middle positions, each carrying a level.
enum class CellKind {
  TypeI,
  TypeII,
  TypeIII,
  I0,
  I2,
  II0,
  II2,
};

struct CellTag {
  CellKind kind;
  long level = 0;  // 0 for the TypeI/II/III layout

  friend bool operator==(const CellTag&, const CellTag&) = default;
  friend auto operator<=>(const CellTag&, const CellTag&) = default;
};

std::string cell_name(const CellTag& tag, bool primed);

/// An edge coloring (a_1, ..., a_{2n-3}) with implicit boundary labels
/// a_0 = a_{2n-2} = 1.  For the Y basis the middle label a_{n-1} sits on
/// the fused edge and takes values 0 or 2.
struct Coloring {
  long n;
  std::vector<long> labels;

  long label(long i) const;  // a_i with the boundary convention
};

bool is_admissible(long a, long b, long c);
bool is_q_admissible(long a, long b, long c, long r);

/// Ordered, partitioned basis layout.  Cells appear in the paper's display
/// order; colorings inside a cell are sorted lexicographically.
struct BasisLayout {
  BasisId id;
  long n;
  long r;
  std::vector<std::pair<Coloring, CellTag>> entries;
  // cell order actually realized (zero-size cells dropped)
  std::vector<CellTag> cell_order;
};

/// Exact per-cell counts and the Section-2 aggregates, computed by lattice
/// path DP (no enumeration).
struct CountProfile {
  long n = 0;
  long r = 0;
  Int k;        // number of Type I (= Type II) colorings
  Int k_prime;  // number of Type III colorings
  Int total;    // dimension of the module, = 2k + k'
  std::map<long, Int> k0, k2, l0, l2;          // B_T cells by level
  std::map<long, Int> k0p, k2p, l0p, l2p;      // B_Y cells by level
  /// k_m = 2(k_0(a_min) + k_0(a_min+2) + ... + k_0(m)); the identity-block
  /// size in front of the Section-3 matrices.
  Int k_aggregate(long m) const;

  Int cell_count(const CellTag& tag, bool primed) const;
};

/// Brute-force enumeration of the ordered layout; desk scale only.
BasisLayout enumerate_basis(BasisId id, long n, long r);

/// DP-computed counts; must agree with enumerate_basis wherever both run.
CountProfile count_profile(long n, long r);

/// Exact set of values a_position takes over all q-admissible B_T colorings.
std::set<long> attained_values(long n, long r, long position);

/// value -> number of q-admissible B_T colorings with a_position = value.
std::map<long, Int> label_distribution(long n, long r, long position);

/// Non-empty cells of a basis in display order, derived from DP counts
/// (no enumeration; usable at large n).
std::vector<CellTag> layout_cells(BasisId id, long n, long r);

}  // namespace kb
