#pragma once

#include <map>
#include <string>
#include <vector>

#include "kb/certify.hpp"
#include "kb/cyclo.hpp"

namespace kb {

/// Scalars of rho(T_{delta_h}^m) on the eigenspaces of the label a_{2h},
/// for the genus-g hyperelliptic picture (2g+2 punctures, n = g+1).
/// The element is projectively trivial iff all scalars coincide.
struct TwistScalarSet {
  long g = 0, h = 0, m = 0;
  long r = 0, t = 0;
  std::map<long, CycloElem> scalars;  // attained a_{2h} value -> scalar

  bool trivial() const;
};

/// Exact scalar set; a-values are computed from the coloring DP, never
/// taken from a closed-form description.
TwistScalarSet delta_scalar_set(long g, long h, long m,
                                const RootChoice& root);

/// Closed-form triviality condition of the matching Prop 4.2 case;
/// depends only on (r, g, m).
bool prop42_closed_condition(long r, long g, long m);

struct Prop42Mismatch {
  long r = 0, g = 0, h = 0, m = 0;
  bool closed = false;
  bool direct = false;
};

struct Prop42Report {
  long checked = 0;
  std::vector<Prop42Mismatch> mismatches;
  /// Mismatches with closed = true but direct = false.  The closed-form
  /// conditions are sufficient, so this must stay empty; a nonempty list
  /// is a soundness failure, not a reporting matter.
  long sufficiency_violations = 0;
};

/// Compare the closed-form condition against the direct equal-scalars test
/// for every r <= r_max, 2 <= g <= g_max, 1 <= h <= g-1, m <= m_max.
/// Also asserts the h <-> g-h symmetry of the direct test.
Prop42Report prop42_verify(long r_max, long g_max, long m_max);

/// Evidence that at some root both defining families of N^iota_(k,l) die:
/// the k-th half-twist power is trivial, every separating twist power
/// T_{delta_h}^l acts trivially, and the commutator M has infinite order.
struct NklEvidence {
  long g = 0, k = 0, l = 0;
  OrderCertificate commutator;          // InfiniteOrder at n = g+1
  std::vector<TwistScalarSet> separating;  // h = 1..g-1, all trivial
};

std::vector<NklEvidence> certify_Nkl(long g, long k, long l, long r_max,
                                     long jobs = 1, bool first_only = false);

enum class CellStatus { Finite, Infinite, Unknown };
enum class Provenance { Computed, Literature };

struct TableCell {
  long g = 0, m = 0;
  CellStatus status = CellStatus::Unknown;
  Provenance provenance = Provenance::Literature;
  std::string citation;
  std::vector<NklEvidence> evidence;  // nonempty iff computed-infinite
};

/// The g x m classification grid for the index of the normal closure of
/// m-th twist powers along all symmetric simple closed curves.
std::vector<TableCell> build_table(long g_max = 22, long m_max = 10,
                                   long jobs = 1);

}  // namespace kb
