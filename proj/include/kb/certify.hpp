#pragma once

#include <string>
#include <vector>

#include "kb/block_matrix.hpp"
#include "kb/cyclo.hpp"
#include "kb/rep.hpp"

namespace kb {

/// Certified statement about the projective order of a representation
/// matrix.  An InfiniteOrder certificate carries enough exact data to be
/// re-verified without rebuilding the matrix; see reverify in json_io.
struct OrderCertificate {
  enum class Kind { InfiniteOrder, FiniteOrder, Inconclusive };

  Kind kind = Kind::Inconclusive;
  RepElement element{};
  long r = 0;
  long t = 0;

  // InfiniteOrder evidence: a diagonal-coupled block B of the matrix with
  // det(B) = 1 (so finite projective order would force root-of-unity
  // eigenvalues), real trace, and tr(B) - dim(B) > 0.
  long witness_a = -1;  // level of the witness pair; -1 if the block is not
                        // a level cell (e.g. the TypeI/TypeII pair)
  CycloElem trace;
  Int dim = 0;
  CycloElem det;        // determinant of the witness grid cell, must be 1
  int sign_witness = 0;

  // FiniteOrder evidence: smallest N with M^N = scalar * I.
  long order = 0;
  CycloElem scalar;

  std::string rationale;
};

/// Trace-excess test over every coupled diagonal component of M that sits
/// next to an identity block.  Returns InfiniteOrder for the first witness
/// (deterministic), else Inconclusive; never claims finiteness.
OrderCertificate infinite_order_certificate(const ScalarBlockMatrix& m,
                                            const RepElement& element,
                                            const RootChoice& root);

/// Exact projective-power search: smallest N <= maxN with M^N scalar.
OrderCertificate finite_order_check(const ScalarBlockMatrix& m, long max_n,
                                    const RepElement& element,
                                    const RootChoice& root);

/// Exact test q^m = (-1)^m, the condition making rho_T of a half twist
/// projectively trivial.
bool halftwist_trivial(const RootChoice& root, long m);

/// All t in [1, modulus) with gcd(t, modulus) = 1, increasing.
std::vector<long> coprime_residues(long modulus);

/// Scan roots with r <= r_max where halftwist_trivial(root, m) holds and
/// the commutator M (or, as a second route, sigma_1^2 sigma_2^-2) carries
/// an infinite-order certificate.  two_n is the number of punctures.
std::vector<OrderCertificate> certify_power_subgroup(long two_n, long m,
                                                     long r_max,
                                                     long jobs = 1);

struct F2ScanEntry {
  long r = 0;
  bool positive = false;
  long witness_t = 0;  // 0 when negative (exhaustive over t)
};

/// For each r in [r_lo, r_hi]: does some primitive r-th root give
/// f_2(q) > 2?  Sign decisions are exact or interval-certified.
std::vector<F2ScanEntry> scan_lemma_26(long r_lo, long r_hi);

}  // namespace kb
