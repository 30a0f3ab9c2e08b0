#include "kb/recoupling.hpp"

#include <stdexcept>

namespace kb {

CycloElem sixj(const SixJKey& key, const RootChoice& root) {
  const auto& k = key.colors;
  CycloElem two = qint(root, 2);
  if (k == std::array<long, 6>{1, 1, 0, 1, 1, 0}) return -two.inverse();
  if (k == std::array<long, 6>{1, 1, 2, 1, 1, 0})
    return CycloElem::one(root.modulus());
  if (k == std::array<long, 6>{1, 1, 2, 1, 1, 2}) return two.inverse();
  if (k == std::array<long, 6>{1, 1, 0, 1, 1, 2})
    return qint(root, 3) * (two * two).inverse();
  if (k == std::array<long, 6>{1, 1, 2, 1, 3, 2})
    return CycloElem::one(root.modulus());
  throw std::invalid_argument(
      "sixj: key not implemented; general 6j evaluation is out of scope");
}

ScalarBlockMatrix matrix_A(long n, long r, const RootChoice& root) {
  if (root.r != r) throw std::invalid_argument("matrix_A: r mismatch");
  const long N = root.modulus();
  CountProfile counts = count_profile(n, r);
  if (counts.k <= 0) throw std::logic_error("matrix_A: empty Type I block");

  std::vector<BlockGroup> groups = {{"TypeI", counts.k}, {"TypeII", counts.k}};
  const bool has_three = counts.k_prime > 0;
  if (has_three) groups.push_back({"TypeIII", counts.k_prime});

  CycloElem two_inv = qint(root, 2).inverse();
  ScalarBlockMatrix a(std::move(groups), N);
  a.set_entry(0, 0, -two_inv);
  a.set_entry(0, 1, qint(root, 3) * two_inv * two_inv);
  a.set_entry(1, 0, CycloElem::one(N));
  a.set_entry(1, 1, two_inv);
  if (has_three) a.set_entry(2, 2, CycloElem::one(N));
  return a;
}

std::pair<ScalarBlockMatrix, ScalarBlockMatrix> matrix_X(
    long a, long n, long r, const RootChoice& root) {
  const long N = root.modulus();
  CountProfile counts = count_profile(n, r);
  Int l2a = counts.cell_count({CellKind::II2, a}, false);
  if (l2a <= 0)
    throw std::invalid_argument("matrix_X: empty block II2(" +
                                std::to_string(a) + ")");
  CycloElem two_inv = qint(root, 2).inverse();

  if (a == r - 3) {
    std::vector<BlockGroup> g = {{cell_name({CellKind::II2, a}, false), l2a}};
    ScalarBlockMatrix x(g, N), xinv(g, N);
    x.set_entry(0, 0, -two_inv);
    xinv.set_entry(0, 0, -qint(root, 2));
    return {x, xinv};
  }

  Int l0a2 = counts.cell_count({CellKind::II0, a + 2}, false);
  if (l0a2 != l2a)
    throw std::logic_error("matrix_X: |II0(a+2)| must equal |II2(a)|");
  std::vector<BlockGroup> g = {{cell_name({CellKind::II2, a}, false), l2a},
                               {cell_name({CellKind::II0, a + 2}, false), l0a2}};
  CycloElem a1 = qint(root, a + 1), a2 = qint(root, a + 2),
            a3 = qint(root, a + 3);
  CycloElem a2_inv = a2.inverse();

  ScalarBlockMatrix x(g, N);
  x.set_entry(0, 0, -two_inv);
  x.set_entry(0, 1, a3 * two_inv * a2_inv);
  x.set_entry(1, 0, CycloElem::one(N));
  x.set_entry(1, 1, a1 * a2_inv);

  ScalarBlockMatrix xinv(g, N);
  xinv.set_entry(0, 0, -a1 * a2_inv);
  xinv.set_entry(0, 1, a3 * two_inv * a2_inv);
  xinv.set_entry(1, 0, CycloElem::one(N));
  xinv.set_entry(1, 1, two_inv);
  return {x, xinv};
}

std::vector<std::pair<long, CycloElem>> fusion_BT_to_BY(
    const Coloring& coloring, long r, const RootChoice& root) {
  const long n = coloring.n;
  const long lo = coloring.label(n - 2), mid = coloring.label(n - 1),
             hi = coloring.label(n);
  const long N = root.modulus();
  const CycloElem one = CycloElem::one(N);

  if (hi == lo + 2 || hi == lo - 2) {
    // I cells go over by the identity, with fused label 2.
    return {{2, one}};
  }
  const long a = mid;
  if (mid == lo - 1) {
    // II2-shaped: (a+1, a, a+1)
    if (a == r - 3) return {{0, -qint(root, 2).inverse()}};
    return {{0, -qint(root, 2).inverse()}, {2, one}};
  }
  // II0-shaped: (a-1, a, a-1)
  CycloElem qa_inv = qint(root, a).inverse();
  return {{0, qint(root, a + 1) * qint(root, 2).inverse() * qa_inv},
          {2, qint(root, a - 1) * qa_inv}};
}

}  // namespace kb
