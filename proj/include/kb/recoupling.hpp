#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kb/block_matrix.hpp"
#include "kb/coloring.hpp"
#include "kb/cyclo.hpp"

namespace kb {

/// The six colors of a quantum 6j-symbol, row-major:
/// { a b e ; c d f }.  Only the handful of instances the matrices need are
/// implemented; anything else raises.
struct SixJKey {
  std::array<long, 6> colors;

  friend bool operator==(const SixJKey&, const SixJKey&) = default;
};

CycloElem sixj(const SixJKey& key, const RootChoice& root);

/// Change of coordinates B_T -> B_T' over the TypeI/TypeII/TypeIII layout:
/// [ -[2]^-1 I_k   [3][2]^-2 I_k   0     ]
/// [  I_k          [2]^-1 I_k      0     ]
/// [  0            0               I_k'  ]
/// Satisfies A * A = I.
ScalarBlockMatrix matrix_A(long n, long r, const RootChoice& root);

/// Change of coordinates of the (II2(a), II0(a+2)) pair into the primed
/// cells at level a+2, together with its displayed inverse.  For a = r-3
/// the matrix degenerates to the 1x1 block -[2]^-1 I.
std::pair<ScalarBlockMatrix, ScalarBlockMatrix> matrix_X(
    long a, long n, long r, const RootChoice& root);

/// Expansion of a B_T basis element over B_Y: list of (middle label of the
/// target, coefficient).  Only the middle three labels change.
std::vector<std::pair<long, CycloElem>> fusion_BT_to_BY(
    const Coloring& coloring, long r, const RootChoice& root);

}  // namespace kb
