#include "kb/hyperelliptic.hpp"

#include <optional>
#include <stdexcept>

#include "kb/coloring.hpp"
#include "kb/detail/parallel.hpp"
#include "kb/rep.hpp"

namespace kb {

namespace {

using detail::parallel_for;

// Cheap pre-filter for the commutator certificate: does some paired level
// have positive trace excess?  Same sign test the certificate performs,
// without assembling M.
bool some_level_has_excess(long n, long r, const RootChoice& root) {
  CountProfile counts = count_profile(n, r);
  const long N = root.modulus();
  const long a0 = (n % 2 == 1) ? 1 : 0;
  for (long a = a0; a + 2 <= r - 2 && a <= n; a += 2) {
    if (counts.cell_count({CellKind::II2, a}, false) <= 0) continue;
    CycloElem excess = (qpow(root, a + 1, 2) - qpow(root, -(a + 1), 2)) *
                       (qpow(root, a + 3, 2) - qpow(root, -(a + 3), 2));
    if (conj_q(excess) == excess && sign_real(excess) == 1) return true;
  }
  return false;
}

}  // namespace

bool TwistScalarSet::trivial() const {
  if (scalars.empty())
    throw std::logic_error("TwistScalarSet: empty attained-value set");
  const CycloElem& first = scalars.begin()->second;
  for (const auto& [a, s] : scalars)
    if (s != first) return false;
  return true;
}

TwistScalarSet delta_scalar_set(long g, long h, long m,
                                const RootChoice& root) {
  if (g < 2 || h < 1 || h > g - 1)
    throw std::invalid_argument("delta_scalar_set: need g >= 2, 1 <= h <= g-1");
  const long n = g + 1;
  const long w = 2 * h + 1;  // strand count of the full twist under delta_h

  TwistScalarSet set;
  set.g = g;
  set.h = h;
  set.m = m;
  set.r = root.r;
  set.t = root.t;
  for (long a : attained_values(n, root.r, 2 * h)) {
    // q^{3m(2h+1)/2} q^{-m a(a+2)/2}, and the same thing as the 2m-th
    // power of the (2h+1)-strand full-twist scalar.
    CycloElem direct = qpow(root, m * (3 * w - a * (a + 2)), 2);
    CycloElem via_fulltwist = full_twist_scalar(w, a, root).pow(2 * m);
    if (direct != via_fulltwist)
      throw std::logic_error("delta_scalar_set: scalar forms disagree");
    set.scalars.emplace(a, direct);
  }
  return set;
}

bool prop42_closed_condition(long r, long g, long m) {
  if (r == 4) return true;
  if (r == 5 || r == 6) return (6 * m) % r == 0;
  if (g <= 3) return (6 * m) % r == 0;
  return (2 * m) % r == 0;
}

Prop42Report prop42_verify(long r_max, long g_max, long m_max) {
  Prop42Report report;
  for (long r = 4; r <= r_max; ++r) {
    RootChoice root(r, 1);
    for (long g = 2; g <= g_max; ++g)
      for (long h = 1; h <= g - 1; ++h)
        for (long m = 1; m <= m_max; ++m) {
          bool direct = delta_scalar_set(g, h, m, root).trivial();
          bool mirror = delta_scalar_set(g, g - h, m, root).trivial();
          if (direct != mirror)
            throw std::logic_error("prop42_verify: h <-> g-h asymmetry");
          bool closed = prop42_closed_condition(r, g, m);
          ++report.checked;
          if (closed != direct) {
            report.mismatches.push_back({r, g, h, m, closed, direct});
            if (closed && !direct) ++report.sufficiency_violations;
          }
        }
  }
  return report;
}

std::vector<NklEvidence> certify_Nkl(long g, long k, long l, long r_max,
                                     long jobs, bool first_only) {
  if (g < 2) throw std::invalid_argument("certify_Nkl: g < 2");
  const long n = g + 1;

  // Roots passing all the cheap exact conditions; the expensive commutator
  // assembly runs only on these.
  std::vector<RootChoice> candidates;
  for (long r = 4; r <= r_max; ++r)
    for (long t : coprime_residues(4 * r)) {
      RootChoice root(r, t);
      if (!halftwist_trivial(root, k)) continue;
      if (!some_level_has_excess(n, r, root)) continue;
      bool separating_ok = true;
      for (long h = 1; h <= g - 1 && separating_ok; ++h)
        separating_ok = delta_scalar_set(g, h, l, root).trivial();
      if (separating_ok) candidates.push_back(root);
    }

  auto try_root = [&](const RootChoice& root) -> std::optional<NklEvidence> {
    RepElement el{RepElement::Kind::CommutatorM, 0, 0};
    OrderCertificate cert =
        infinite_order_certificate(assemble_M(n, root.r, root), el, root);
    if (cert.kind != OrderCertificate::Kind::InfiniteOrder)
      return std::nullopt;
    NklEvidence ev;
    ev.g = g;
    ev.k = k;
    ev.l = l;
    ev.commutator = cert;
    for (long h = 1; h <= g - 1; ++h)
      ev.separating.push_back(delta_scalar_set(g, h, l, root));
    return ev;
  };

  std::vector<NklEvidence> out;
  if (first_only) {
    for (const RootChoice& root : candidates)
      if (auto ev = try_root(root)) {
        out.push_back(std::move(*ev));
        break;
      }
    return out;
  }

  const long count = static_cast<long>(candidates.size());
  std::vector<std::optional<NklEvidence>> slots(count);
  parallel_for(count, jobs,
               [&](long i) { slots[i] = try_root(candidates[i]); });
  for (auto& slot : slots)
    if (slot) out.push_back(std::move(*slot));
  return out;
}

std::vector<TableCell> build_table(long g_max, long m_max, long jobs) {
  std::vector<TableCell> cells;
  for (long g = 1; g <= g_max; ++g)
    for (long m = 1; m <= m_max; ++m) {
      TableCell cell;
      cell.g = g;
      cell.m = m;
      if (m == 1) {
        cell.status = CellStatus::Finite;
        cell.provenance = Provenance::Literature;
        cell.citation =
            "Dehn twists generate, so the closure of first powers is the "
            "whole group";
      } else if (g == 1) {
        cell.status = m <= 5 ? CellStatus::Finite : CellStatus::Infinite;
        cell.provenance = Provenance::Literature;
        cell.citation =
            "Newman: N_m in SL(2,Z) has finite index for m <= 5, infinite "
            "for m >= 6";
      } else if (g == 2 && (m == 2 || m == 3)) {
        cell.status = CellStatus::Finite;
        cell.provenance = Provenance::Literature;
        cell.citation =
            "Humphries: N_2 (g >= 1) and N_3 (g = 2, 3) have finite index; "
            "transfers to Delta(2,0) by Birman-Hilden";
      } else if (g == 2 && (m == 4 || m == 6)) {
        cell.status = CellStatus::Infinite;
        cell.provenance = Provenance::Literature;
        cell.citation =
            "Humphries: m-th twist powers along all SCCs have infinite "
            "index in M(2,0) for m >= 4";
      } else if (m >= 5 && m != 6) {
        cell.status = CellStatus::Infinite;
        cell.provenance = Provenance::Computed;
        cell.citation = "certificate: N^iota_(m,m) dies at a root where the "
                        "commutator has infinite order";
      } else {
        cell.status = CellStatus::Unknown;
        cell.provenance = Provenance::Literature;
        cell.citation = "open";
      }
      cells.push_back(cell);
    }

  // Fill the computed cells with actual certificates, in parallel.
  std::vector<long> computed;
  for (long i = 0; i < static_cast<long>(cells.size()); ++i)
    if (cells[i].provenance == Provenance::Computed) computed.push_back(i);
  parallel_for(static_cast<long>(computed.size()), jobs, [&](long idx) {
    TableCell& cell = cells[computed[idx]];
    cell.evidence =
        certify_Nkl(cell.g, cell.m, cell.m, 2 * cell.m, 1, true);
    if (cell.evidence.empty())
      throw std::logic_error("build_table: no certificate for g=" +
                             std::to_string(cell.g) + " m=" +
                             std::to_string(cell.m));
  });
  return cells;
}

}  // namespace kb
