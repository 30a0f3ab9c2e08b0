#pragma once

#include <string>
#include <vector>

#include "kb/block_matrix.hpp"
#include "kb/coloring.hpp"
#include "kb/cyclo.hpp"

namespace kb {

/// The group elements the closed forms cover.  Arbitrary braid words are
/// rejected by construction.
struct RepElement {
  enum class Kind {
    HalfTwistPow,        // sigma_1^s
    Commutator2,         // sigma_1^s sigma_2^-s
    FullTwist,           // (sigma_1 ... sigma_{m-1})^m
    SigmaN,              // sigma_n^j
    CommutatorM,         // (s_1..s_{n-1})^n s_n (s_1..s_{n-1})^-n s_n^-1
    SeparatingTwistPow,  // (sigma_1 ... sigma_{2h})^{(4h+2) m}
  };
  Kind kind;
  long param1 = 0;  // s, m, j, or h
  long param2 = 0;  // m for SeparatingTwistPow

  std::string describe() const;
};

/// Eigenvalue of a single positive half-twist on a trivalent vertex with
/// colors (a; b, c): (-1)^{(a-b-c)/2} q^{-(a(a+2)-b(b+2)-c(c+2))/8}.
/// The eighth-power exponent is asserted to reduce to a quarter power.
CycloElem twist_coeff(long a, long b, long c, const RootChoice& root);

/// Trace polynomial f_s(q) with tr rho_T(sigma_1^s sigma_2^-s) = f_s k + k'.
CycloElem trace_f(long s, const RootChoice& root);

/// Scalar of the full twist (sigma_1...sigma_{m-1})^m on a basis vector
/// whose label a_{m-1} equals a_label: (-1)^{m+a} q^{3m/4} q^{-(a^2+2a)/4}.
CycloElem full_twist_scalar(long m, long a_label, const RootChoice& root);

/// rho_T(sigma_1^s sigma_2^-s) over the TypeI/II/III layout.  Computed from
/// the closed form and asserted equal to the product D(s) A D(-s) A.
ScalarBlockMatrix rho_commutator2(long s, long n, long r,
                                  const RootChoice& root);

/// Diagonal of half-twist eigenvalues over the TypeI/II/III layout.
ScalarBlockMatrix rho_halftwist_pow(long s, long n, long r,
                                    const RootChoice& root);

/// Y(a): diagonal (-q^{3/4}, q^{-1/4}) over the primed level-a pair.
ScalarBlockMatrix matrix_Y(long a, long n, long r, const RootChoice& root);

/// Z(a) = f_a(q) I_{l2(a)} (+) f_{a+2}(q) I_{l0(a+2)}.
ScalarBlockMatrix matrix_Z(long a, long n, long r, const RootChoice& root);

/// rho_T(sigma_n^j) over the Section-3 layout of B_T.
ScalarBlockMatrix rho_sigma_n(long j, long n, long r, const RootChoice& root);

/// rho_T((sigma_1...sigma_{n-1})^n): diagonal of full-twist scalars over
/// the Section-3 layout.
ScalarBlockMatrix rho_fulltwist_T(long n, long r, const RootChoice& root);

/// The commutator matrix M over the Section-3 layout.  Every M(a) block is
/// built both from the product form Z X^-1 Y X Z^-1 X^-1 Y^-1 X and the
/// closed form; disagreement is a fatal internal error.
ScalarBlockMatrix assemble_M(long n, long r, const RootChoice& root);

/// Closed-form M(a) block alone (the 2x2 pair over size l2(a)).
ScalarBlockMatrix closed_form_M_block(long a, long n, long r,
                                      const RootChoice& root);

/// Diagonal matrix of a supported element, grouped by the attained values
/// of the deciding label (used for FullTwist and SeparatingTwistPow).
ScalarBlockMatrix rho_diagonal_by_label(long m_braid, long power, long n,
                                        long r, const RootChoice& root);

/// Dispatch: representation matrix of any supported element.
ScalarBlockMatrix rho_of(const RepElement& element, long n, long r,
                         const RootChoice& root);

}  // namespace kb
