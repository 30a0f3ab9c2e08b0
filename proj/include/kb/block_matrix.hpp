#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kb/cyclo.hpp"
#include "kb/rational.hpp"

namespace kb {

/// One index group of a block layout.  Sizes are exact integers; they grow
/// exponentially in n, so they never index anything, they only weight
/// traces and determinant exponents.
struct BlockGroup {
  std::string name;
  Int size;
};

/// Square matrix described as a small grid of (scalar x identity) blocks
/// over an ordered list of index groups.  A nonzero entry between groups i
/// and j is only well-typed when the two groups have equal size.  All of
/// the paper-shaped matrices (A, X(a), Y, Z, the representation matrices
/// and M) have this form, so the full dimension is never materialized.
class ScalarBlockMatrix {
 public:
  explicit ScalarBlockMatrix(std::vector<BlockGroup> groups, long modulus);

  static ScalarBlockMatrix identity(std::vector<BlockGroup> groups,
                                    long modulus);

  long modulus() const { return modulus_; }
  const std::vector<BlockGroup>& groups() const { return groups_; }
  long grid_size() const { return static_cast<long>(groups_.size()); }
  Int dimension() const;

  const std::optional<CycloElem>& entry(long i, long j) const;
  void set_entry(long i, long j, CycloElem value);

  /// Scalar of the (i, i) block, zero if the entry is empty.
  CycloElem diagonal_scalar(long i) const;

  ScalarBlockMatrix operator*(const ScalarBlockMatrix& rhs) const;
  ScalarBlockMatrix inverse() const;
  ScalarBlockMatrix pow(long exponent) const;

  /// Sum over the diagonal of scalar * group size.
  CycloElem trace() const;
  /// Product over block-diagonal components of det(component)^size.
  CycloElem determinant() const;

  bool is_identity() const;
  /// True iff the matrix is c * I; reports c when so.
  bool is_scalar(CycloElem* scalar_out = nullptr) const;

  /// Entry-wise map (group structure unchanged).
  ScalarBlockMatrix map_entries(
      const std::function<CycloElem(const CycloElem&)>& f) const;

  /// Block-diagonal concatenation.
  static ScalarBlockMatrix direct_sum(const ScalarBlockMatrix& a,
                                      const ScalarBlockMatrix& b);

  friend bool operator==(const ScalarBlockMatrix& a,
                         const ScalarBlockMatrix& b);
  friend bool operator!=(const ScalarBlockMatrix& a,
                         const ScalarBlockMatrix& b) {
    return !(a == b);
  }

 private:
  // Connected components of the off-diagonal sparsity graph; every component
  // has uniform group size, so it can be eliminated as a dense scalar matrix.
  std::vector<std::vector<long>> components() const;

  long modulus_;
  std::vector<BlockGroup> groups_;
  std::vector<std::optional<CycloElem>> grid_;  // row-major, grid_size^2
};

}  // namespace kb
