#include "kb/rep.hpp"

#include <map>
#include <stdexcept>

#include "kb/recoupling.hpp"

namespace kb {

namespace {

CycloElem sign_pow(long e, long modulus) {
  return CycloElem::from_rational(modulus, (e % 2 == 0) ? 1 : -1);
}

// Groups of the Section-3 layout with their sizes, plus a tag -> index map.
struct Section3Layout {
  std::vector<BlockGroup> groups;
  std::map<CellTag, long> index;
  std::vector<CellTag> cells;
};

Section3Layout section3_layout(long n, long r) {
  Section3Layout layout;
  layout.cells = layout_cells(BasisId::T, n, r);
  CountProfile counts = count_profile(n, r);
  for (const auto& tag : layout.cells) {
    layout.index[tag] = static_cast<long>(layout.groups.size());
    layout.groups.push_back({cell_name(tag, false),
                             counts.cell_count(tag, false)});
  }
  return layout;
}

bool has_cell(const Section3Layout& layout, const CellTag& tag) {
  return layout.index.count(tag) > 0;
}

}  // namespace

std::string RepElement::describe() const {
  switch (kind) {
    case Kind::HalfTwistPow:
      return "sigma_1^" + std::to_string(param1);
    case Kind::Commutator2:
      return "sigma_1^" + std::to_string(param1) + " sigma_2^-" +
             std::to_string(param1);
    case Kind::FullTwist:
      return "(sigma_1..sigma_" + std::to_string(param1 - 1) + ")^" +
             std::to_string(param1);
    case Kind::SigmaN:
      return "sigma_n^" + std::to_string(param1);
    case Kind::CommutatorM:
      return "[(sigma_1..sigma_{n-1})^n, sigma_n]";
    case Kind::SeparatingTwistPow:
      return "T_delta_" + std::to_string(param1) + "^" +
             std::to_string(param2);
  }
  return "?";
}

CycloElem twist_coeff(long a, long b, long c, const RootChoice& root) {
  if (!is_admissible(a, b, c))
    throw std::invalid_argument("twist_coeff: triple not admissible");
  const long long e8 = static_cast<long long>(a) * (a + 2) -
                       static_cast<long long>(b) * (b + 2) -
                       static_cast<long long>(c) * (c + 2);
  // The eighth power always reduces to a quarter power for admissible
  // triples (a+b+c even makes a(a+2)-b(b+2)-c(c+2) even).
  if (e8 % 2 != 0)
    throw std::logic_error("twist_coeff: exponent does not reduce to q^{1/4}");
  return sign_pow((a - b - c) / 2, root.modulus()) * qpow(root, -e8 / 2, 4);
}

CycloElem trace_f(long s, const RootChoice& root) {
  const long N = root.modulus();
  CycloElem sgn = sign_pow(s, N);
  CycloElem head = sgn * (qpow(root, s) + qpow(root, -s));
  CycloElem num = qpow(root, s, 2) - sgn * qpow(root, -s, 2);
  CycloElem den = qpow(root, 1, 2) + qpow(root, -1, 2);
  CycloElem ratio = num / den;
  return head - sgn * ratio * ratio;
}

CycloElem full_twist_scalar(long m, long a_label, const RootChoice& root) {
  return sign_pow(m + a_label, root.modulus()) * qpow(root, 3 * m, 4) *
         qpow(root, -a_label * (a_label + 2), 4);
}

ScalarBlockMatrix rho_halftwist_pow(long s, long n, long r,
                                    const RootChoice& root) {
  ScalarBlockMatrix a = matrix_A(n, r, root);  // borrows the Type layout
  ScalarBlockMatrix d(a.groups(), root.modulus());
  d.set_entry(0, 0, sign_pow(s, root.modulus()) * qpow(root, 3 * s, 4));
  for (long i = 1; i < d.grid_size(); ++i)
    d.set_entry(i, i, qpow(root, -s, 4));
  return d;
}

ScalarBlockMatrix rho_commutator2(long s, long n, long r,
                                  const RootChoice& root) {
  if (s < 0) throw std::invalid_argument("rho_commutator2: s must be >= 0");
  const long N = root.modulus();
  ScalarBlockMatrix a = matrix_A(n, r, root);

  const CycloElem one = CycloElem::one(N);
  CycloElem sgn = sign_pow(s, N);
  CycloElem two_inv = qint(root, 2).inverse();
  CycloElem three = qint(root, 3);
  CycloElem qs = qpow(root, s), qs_inv = qpow(root, -s);

  ScalarBlockMatrix closed(a.groups(), N);
  closed.set_entry(0, 0, (one + sgn * qs * three) * two_inv * two_inv);
  closed.set_entry(0, 1,
                   (-one + sgn * qs) * three * two_inv * two_inv * two_inv);
  closed.set_entry(1, 0, (one - sgn * qs_inv) * two_inv);
  closed.set_entry(1, 1, (one + sgn * qs_inv * three) * two_inv * two_inv);
  if (closed.grid_size() > 2) closed.set_entry(2, 2, one);

  ScalarBlockMatrix product = rho_halftwist_pow(s, n, r, root) * a *
                              rho_halftwist_pow(-s, n, r, root) * a;
  if (closed != product)
    throw std::logic_error(
        "rho_commutator2: closed form disagrees with D(s) A D(-s) A");
  return closed;
}

ScalarBlockMatrix matrix_Y(long a, long n, long r, const RootChoice& root) {
  const long N = root.modulus();
  CountProfile counts = count_profile(n, r);
  Int s0 = counts.cell_count({CellKind::II0, a}, true);
  Int s2 = counts.cell_count({CellKind::II2, a}, true);
  if (s0 <= 0)
    throw std::invalid_argument("matrix_Y: empty block II'0(" +
                                std::to_string(a) + ")");
  std::vector<BlockGroup> groups = {{cell_name({CellKind::II0, a}, true), s0}};
  if (s2 > 0) groups.push_back({cell_name({CellKind::II2, a}, true), s2});
  ScalarBlockMatrix y(groups, N);
  y.set_entry(0, 0, -qpow(root, 3, 4));
  if (s2 > 0) y.set_entry(1, 1, qpow(root, -1, 4));
  return y;
}

ScalarBlockMatrix matrix_Z(long a, long n, long r, const RootChoice& root) {
  const long N = root.modulus();
  CountProfile counts = count_profile(n, r);
  Int s2 = counts.cell_count({CellKind::II2, a}, false);
  Int s0 = counts.cell_count({CellKind::II0, a + 2}, false);
  if (s2 <= 0)
    throw std::invalid_argument("matrix_Z: empty block II2(" +
                                std::to_string(a) + ")");
  std::vector<BlockGroup> groups = {{cell_name({CellKind::II2, a}, false), s2}};
  if (s0 > 0)
    groups.push_back({cell_name({CellKind::II0, a + 2}, false), s0});
  ScalarBlockMatrix z(groups, N);
  z.set_entry(0, 0, full_twist_scalar(n, a, root));
  if (s0 > 0) z.set_entry(1, 1, full_twist_scalar(n, a + 2, root));
  return z;
}

ScalarBlockMatrix rho_sigma_n(long j, long n, long r, const RootChoice& root) {
  const long N = root.modulus();
  Section3Layout layout = section3_layout(n, r);
  ScalarBlockMatrix m(layout.groups, N);

  CycloElem eig_two = qpow(root, -j, 4);                    // fused label 2
  CycloElem eig_zero = sign_pow(j, N) * qpow(root, 3 * j, 4);  // fused label 0

  const long a0 = (n % 2 == 1) ? 1 : 0;
  for (const auto& tag : layout.cells) {
    const long idx = layout.index.at(tag);
    if (tag.kind == CellKind::I0 || tag.kind == CellKind::I2) {
      m.set_entry(idx, idx, eig_two);
    } else if (tag.kind == CellKind::II0 && tag.level == a0 + 0 &&
               n % 2 == 1 && tag.level == 1) {
      // II0(1) passes to II'0(1) by the identity
      m.set_entry(idx, idx, eig_zero);
    }
  }
  for (long a = a0; a <= n; a += 2) {
    CellTag lo{CellKind::II2, a}, hi{CellKind::II0, a + 2};
    if (!has_cell(layout, lo)) {
      if (has_cell(layout, hi) && !(n % 2 == 1 && a + 2 == 1))
        throw std::logic_error("rho_sigma_n: II0 block without its II2 pair");
      continue;
    }
    const long i2 = layout.index.at(lo);
    if (!has_cell(layout, hi)) {
      // a = r-3: the change of basis is the scalar -[2]^-1, so the
      // conjugated eigenvalue is just (-q^{3/4})^j.
      if (a != r - 3)
        throw std::logic_error("rho_sigma_n: lone II2 block away from r-3");
      m.set_entry(i2, i2, eig_zero);
      continue;
    }
    const long i0 = layout.index.at(hi);
    auto [x, xinv] = matrix_X(a, n, r, root);
    ScalarBlockMatrix y(x.groups(), N);
    y.set_entry(0, 0, eig_zero);
    y.set_entry(1, 1, eig_two);
    ScalarBlockMatrix conj = xinv * y * x;
    for (long bi = 0; bi < 2; ++bi)
      for (long bj = 0; bj < 2; ++bj) {
        const auto& e = conj.entry(bi, bj);
        if (e && !e->is_zero())
          m.set_entry(bi == 0 ? i2 : i0, bj == 0 ? i2 : i0, *e);
      }
  }
  return m;
}

ScalarBlockMatrix rho_fulltwist_T(long n, long r, const RootChoice& root) {
  const long N = root.modulus();
  Section3Layout layout = section3_layout(n, r);
  ScalarBlockMatrix m(layout.groups, N);
  for (const auto& tag : layout.cells) {
    const long idx = layout.index.at(tag);
    m.set_entry(idx, idx, full_twist_scalar(n, tag.level, root));
  }
  return m;
}

ScalarBlockMatrix closed_form_M_block(long a, long n, long r,
                                      const RootChoice& root) {
  const long N = root.modulus();
  CountProfile counts = count_profile(n, r);
  Int l2a = counts.cell_count({CellKind::II2, a}, false);
  Int l0a2 = counts.cell_count({CellKind::II0, a + 2}, false);
  if (l2a <= 0 || l0a2 != l2a)
    throw std::invalid_argument("closed_form_M_block: invalid level");

  const CycloElem one = CycloElem::one(N);
  // f_a(q) f_{a+2}(q^-1) collapses to q^{a+2}.
  CycloElem u = one - qpow(root, a + 2);
  CycloElem v = one - qpow(root, -(a + 2));
  CycloElem a1 = qint(root, a + 1), a2 = qint(root, a + 2),
            a3 = qint(root, a + 3);
  CycloElem a2_inv = a2.inverse();
  CycloElem two_inv = qint(root, 2).inverse();
  CycloElem ratio = a1 * a3 * a2_inv * a2_inv;

  std::vector<BlockGroup> groups = {
      {cell_name({CellKind::II2, a}, false), l2a},
      {cell_name({CellKind::II0, a + 2}, false), l0a2}};
  ScalarBlockMatrix m(groups, N);
  m.set_entry(0, 0, one - u * ratio);
  m.set_entry(0, 1, u * (-qpow(root, 1, 2) * a1 + qpow(root, -1, 2) * a3) *
                        a1 * a3 * two_inv * a2_inv * a2_inv * a2_inv);
  m.set_entry(1, 0,
              v * (qpow(root, -1, 2) * a1 - qpow(root, 1, 2) * a3) * two_inv *
                  a2_inv);
  m.set_entry(1, 1, one - v * ratio);
  return m;
}

ScalarBlockMatrix assemble_M(long n, long r, const RootChoice& root) {
  const long N = root.modulus();
  Section3Layout layout = section3_layout(n, r);

  ScalarBlockMatrix ft = rho_fulltwist_T(n, r, root);
  ScalarBlockMatrix sn = rho_sigma_n(1, n, r, root);
  ScalarBlockMatrix product = ft * sn * ft.inverse() * sn.inverse();

  ScalarBlockMatrix closed(layout.groups, N);
  for (const auto& tag : layout.cells) {
    const long idx = layout.index.at(tag);
    closed.set_entry(idx, idx, CycloElem::one(N));
  }
  const long a0 = (n % 2 == 1) ? 1 : 0;
  for (long a = a0; a <= n; a += 2) {
    CellTag lo{CellKind::II2, a}, hi{CellKind::II0, a + 2};
    if (!has_cell(layout, lo) || !has_cell(layout, hi)) continue;
    ScalarBlockMatrix block = closed_form_M_block(a, n, r, root);
    const long i2 = layout.index.at(lo), i0 = layout.index.at(hi);
    for (long bi = 0; bi < 2; ++bi)
      for (long bj = 0; bj < 2; ++bj) {
        const auto& e = block.entry(bi, bj);
        const long gi = bi == 0 ? i2 : i0, gj = bj == 0 ? i2 : i0;
        if (e && !e->is_zero())
          closed.set_entry(gi, gj, *e);
        else if (gi == gj)
          closed.set_entry(gi, gj, CycloElem::zero(N));
      }
  }
  if (closed != product)
    throw std::logic_error(
        "assemble_M: closed form disagrees with the product "
        "Z X^-1 Y X Z^-1 X^-1 Y^-1 X");
  return closed;
}

ScalarBlockMatrix rho_diagonal_by_label(long m_braid, long power, long n,
                                        long r, const RootChoice& root) {
  if (m_braid < 2 || m_braid > 2 * n - 1)
    throw std::invalid_argument("rho_diagonal_by_label: braid width out of range");
  const long N = root.modulus();
  const long position = m_braid - 1;
  std::map<long, Int> dist;
  if (position == 2 * n - 2)
    dist[1] = count_profile(n, r).total;  // boundary label, scalar action
  else
    dist = label_distribution(n, r, position);
  std::vector<BlockGroup> groups;
  std::vector<CycloElem> scalars;
  for (const auto& [value, count] : dist) {
    groups.push_back({"a" + std::to_string(position) + "=" +
                          std::to_string(value),
                      count});
    scalars.push_back(full_twist_scalar(m_braid, value, root).pow(power));
  }
  ScalarBlockMatrix m(groups, N);
  for (size_t i = 0; i < scalars.size(); ++i)
    m.set_entry(static_cast<long>(i), static_cast<long>(i), scalars[i]);
  return m;
}

ScalarBlockMatrix rho_of(const RepElement& element, long n, long r,
                         const RootChoice& root) {
  switch (element.kind) {
    case RepElement::Kind::HalfTwistPow:
      return rho_halftwist_pow(element.param1, n, r, root);
    case RepElement::Kind::Commutator2:
      return rho_commutator2(element.param1, n, r, root);
    case RepElement::Kind::FullTwist:
      return rho_diagonal_by_label(element.param1, 1, n, r, root);
    case RepElement::Kind::SigmaN:
      return rho_sigma_n(element.param1, n, r, root);
    case RepElement::Kind::CommutatorM:
      return assemble_M(n, r, root);
    case RepElement::Kind::SeparatingTwistPow:
      return rho_diagonal_by_label(2 * element.param1 + 1, 2 * element.param2,
                                   n, r, root);
  }
  throw std::invalid_argument(
      "rho_of: unsupported element; supported kinds are HalfTwistPow, "
      "Commutator2, FullTwist, SigmaN, CommutatorM, SeparatingTwistPow");
}

}  // namespace kb
