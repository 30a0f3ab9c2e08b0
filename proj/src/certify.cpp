#include "kb/certify.hpp"

#include <numeric>
#include <stdexcept>

#include "kb/detail/parallel.hpp"

namespace kb {

namespace {

using detail::parallel_for;

// Connected components of the off-diagonal sparsity graph, in order of
// their smallest member.  (Same notion block_matrix uses internally.)
std::vector<std::vector<long>> grid_components(const ScalarBlockMatrix& m) {
  const long g = m.grid_size();
  std::vector<long> parent(g);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j)
      if (i != j && m.entry(i, j) && !m.entry(i, j)->is_zero())
        parent[find(i)] = find(j);
  std::vector<std::vector<long>> out;
  std::vector<long> slot(g, -1);
  for (long i = 0; i < g; ++i) {
    long root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(i);
  }
  return out;
}

// Determinant of one component as a small dense matrix (not raised to the
// group size).
CycloElem component_det(const ScalarBlockMatrix& m,
                        const std::vector<long>& comp) {
  const long N = m.modulus();
  const long k = static_cast<long>(comp.size());
  std::vector<CycloElem> dense(k * k, CycloElem::zero(N));
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < k; ++j) {
      const auto& e = m.entry(comp[i], comp[j]);
      if (e) dense[i * k + j] = *e;
    }
  // Fraction-free enough at this scale: plain Gaussian elimination.
  CycloElem det = CycloElem::one(N);
  for (long c = 0; c < k; ++c) {
    long pivot = -1;
    for (long rr = c; rr < k; ++rr)
      if (!dense[rr * k + c].is_zero()) {
        pivot = rr;
        break;
      }
    if (pivot < 0) return CycloElem::zero(N);
    if (pivot != c) {
      for (long j = 0; j < k; ++j)
        std::swap(dense[pivot * k + j], dense[c * k + j]);
      det = -det;
    }
    det *= dense[c * k + c];
    CycloElem inv = dense[c * k + c].inverse();
    for (long rr = c + 1; rr < k; ++rr) {
      CycloElem factor = dense[rr * k + c] * inv;
      for (long j = c; j < k; ++j)
        dense[rr * k + j] -= factor * dense[c * k + j];
    }
  }
  return det;
}

// Level of the first group name shaped like "II2(a)"; -1 otherwise.
long parse_level(const std::string& name) {
  auto open = name.find('(');
  auto close = name.find(')');
  if (open == std::string::npos || close == std::string::npos) return -1;
  return std::stol(name.substr(open + 1, close - open - 1));
}

}  // namespace

OrderCertificate infinite_order_certificate(const ScalarBlockMatrix& m,
                                            const RepElement& element,
                                            const RootChoice& root) {
  OrderCertificate cert;
  cert.element = element;
  cert.r = root.r;
  cert.t = root.t;

  const long N = m.modulus();
  const CycloElem one = CycloElem::one(N);
  auto comps = grid_components(m);

  bool has_identity_block = false;
  for (const auto& comp : comps)
    if (comp.size() == 1 && m.groups()[comp[0]].size > 0 &&
        m.diagonal_scalar(comp[0]) == one)
      has_identity_block = true;
  if (!has_identity_block) {
    cert.rationale = "no identity block; trace-excess argument not applicable";
    return cert;
  }

  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    Int dim = 0;
    CycloElem trace = CycloElem::zero(N);
    for (long idx : comp) {
      const Int& size = m.groups()[idx].size;
      dim += size;
      trace += Rational(size) * m.diagonal_scalar(idx);
    }
    if (dim <= 0) continue;
    CycloElem det = component_det(m, comp);
    if (det != one) continue;
    if (conj_q(trace) != trace) continue;
    CycloElem excess = trace - CycloElem::from_rational(N, Rational(dim));
    if (sign_real(excess) != 1) continue;

    cert.kind = OrderCertificate::Kind::InfiniteOrder;
    cert.witness_a = parse_level(m.groups()[comp[0]].name);
    cert.trace = trace;
    cert.dim = dim;
    cert.det = det;
    cert.sign_witness = 1;
    cert.rationale =
        "matrix has an identity block, so any finite projective order is an "
        "honest finite order; witness block " + m.groups()[comp[0]].name +
        " has det 1, real trace, and tr - dim > 0, impossible for a "
        "root-of-unity spectrum";
    return cert;
  }
  cert.rationale = "trace-excess test failed on every coupled block";
  return cert;
}

OrderCertificate finite_order_check(const ScalarBlockMatrix& m, long max_n,
                                    const RepElement& element,
                                    const RootChoice& root) {
  if (max_n > 64) throw std::invalid_argument("finite_order_check: maxN > 64");
  OrderCertificate cert;
  cert.element = element;
  cert.r = root.r;
  cert.t = root.t;

  ScalarBlockMatrix power = m;
  for (long k = 1; k <= max_n; ++k) {
    CycloElem c;
    if (power.is_scalar(&c)) {
      cert.kind = OrderCertificate::Kind::FiniteOrder;
      cert.order = k;
      cert.scalar = c;
      cert.rationale = "M^" + std::to_string(k) + " is scalar; no smaller "
                       "positive power is";
      return cert;
    }
    if (k < max_n) power = power * m;
  }
  cert.rationale = "no scalar power up to " + std::to_string(max_n);
  return cert;
}

bool halftwist_trivial(const RootChoice& root, long m) {
  if (m < 1) throw std::invalid_argument("halftwist_trivial: m < 1");
  CycloElem rhs =
      CycloElem::from_rational(root.modulus(), (m % 2 == 0) ? 1 : -1);
  return qpow(root, m) == rhs;
}

std::vector<long> coprime_residues(long modulus) {
  std::vector<long> out;
  for (long t = 1; t < modulus; ++t)
    if (std::gcd(t, modulus) == 1) out.push_back(t);
  return out;
}

std::vector<OrderCertificate> certify_power_subgroup(long two_n, long m,
                                                     long r_max, long jobs) {
  if (two_n < 6 || two_n % 2 != 0)
    throw std::invalid_argument("certify_power_subgroup: need 2n >= 6, even");
  const long n = two_n / 2;

  std::vector<RootChoice> roots;
  for (long r = 4; r <= r_max; ++r)
    for (long t : coprime_residues(4 * r)) {
      RootChoice root(r, t);
      if (halftwist_trivial(root, m)) roots.push_back(root);
    }

  std::vector<std::vector<OrderCertificate>> slots(roots.size());
  parallel_for(static_cast<long>(roots.size()), jobs, [&](long i) {
    const RootChoice& root = roots[i];
    {
      RepElement el{RepElement::Kind::CommutatorM, 0, 0};
      OrderCertificate c = infinite_order_certificate(
          assemble_M(n, root.r, root), el, root);
      if (c.kind == OrderCertificate::Kind::InfiniteOrder)
        slots[i].push_back(c);
    }
    {
      RepElement el{RepElement::Kind::Commutator2, 2, 0};
      OrderCertificate c = infinite_order_certificate(
          rho_commutator2(2, n, root.r, root), el, root);
      if (c.kind == OrderCertificate::Kind::InfiniteOrder)
        slots[i].push_back(c);
    }
  });

  std::vector<OrderCertificate> out;
  for (auto& slot : slots)
    for (auto& c : slot) out.push_back(std::move(c));
  return out;
}

std::vector<F2ScanEntry> scan_lemma_26(long r_lo, long r_hi) {
  std::vector<F2ScanEntry> out;
  for (long r = std::max<long>(5, r_lo); r <= r_hi; ++r) {
    F2ScanEntry entry;
    entry.r = r;
    for (long t : coprime_residues(4 * r)) {
      RootChoice root(r, t);
      CycloElem f2 = trace_f(2, root);
      if (conj_q(f2) != f2)
        throw std::logic_error("scan_lemma_26: f_2(q) is not real");
      CycloElem two = CycloElem::from_rational(root.modulus(), 2);
      if (sign_real(f2 - two) == 1) {
        entry.positive = true;
        entry.witness_t = t;
        break;
      }
    }
    out.push_back(entry);
  }
  return out;
}

}  // namespace kb
