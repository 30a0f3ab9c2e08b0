#include "kb/coloring.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace kb {

namespace {

void check_params(long n, long r) {
  if (n < 3) throw std::invalid_argument("basis requires 2n >= 6");
  if (r < 4)
    throw std::invalid_argument(
        "basis requires r >= 4 (r = 3 is out of scope)");
}

// Forward/backward lattice path counts for the B_T strand labels:
// positions 0..2n-2, boundary labels 1, steps +-1, every consecutive
// triple (a_i, 1, a_{i+1}) q-admissible.
struct PathCounts {
  long n, r;
  long len;                          // 2n-2
  std::vector<std::vector<Int>> fwd; // fwd[i][v]: prefixes reaching (i, v)
  std::vector<std::vector<Int>> bwd; // bwd[i][v]: suffixes from (i, v)
};

PathCounts path_counts(long n, long r) {
  PathCounts pc;
  pc.n = n;
  pc.r = r;
  pc.len = 2 * n - 2;
  const long vmax = r - 2;
  pc.fwd.assign(pc.len + 1, std::vector<Int>(vmax + 1, 0));
  pc.bwd.assign(pc.len + 1, std::vector<Int>(vmax + 1, 0));
  if (vmax >= 1) pc.fwd[0][1] = 1;
  for (long i = 1; i <= pc.len; ++i)
    for (long v = 0; v <= vmax; ++v) {
      for (long p : {v - 1, v + 1}) {
        if (p < 0 || p > vmax) continue;
        if (!is_q_admissible(p, 1, v, r)) continue;
        pc.fwd[i][v] += pc.fwd[i - 1][p];
      }
    }
  if (vmax >= 1) pc.bwd[pc.len][1] = 1;
  for (long i = pc.len - 1; i >= 0; --i)
    for (long v = 0; v <= vmax; ++v) {
      for (long s : {v - 1, v + 1}) {
        if (s < 0 || s > vmax) continue;
        if (!is_q_admissible(v, 1, s, r)) continue;
        pc.bwd[i][v] += pc.bwd[i + 1][s];
      }
    }
  return pc;
}

Int at(const std::vector<std::vector<Int>>& table, long i, long v) {
  if (v < 0 || v >= static_cast<long>(table[i].size())) return 0;
  return table[i][v];
}

// Middle-vertex cell tag of a B_T coloring from the shape of
// (a_{n-2}, a_{n-1}, a_n); the four shapes are exclusive and exhaustive.
CellTag t_cell_tag(const Coloring& c) {
  const long n = c.n;
  const long lo = c.label(n - 2), mid = c.label(n - 1), hi = c.label(n);
  if (mid == lo + 1 && mid == hi - 1) return {CellKind::I0, mid};
  if (mid == lo - 1 && mid == hi + 1) return {CellKind::I2, mid};
  if (mid == lo + 1 && mid == hi + 1) return {CellKind::II0, mid};
  return {CellKind::II2, mid};  // mid == lo - 1 && mid == hi - 1
}

CellTag y_cell_tag(const Coloring& c) {
  const long n = c.n;
  const long lo = c.label(n - 2), mid = c.label(n - 1), hi = c.label(n);
  if (mid == 2 && hi == lo + 2) return {CellKind::I0, lo + 1};
  if (mid == 2 && hi == lo - 2) return {CellKind::I2, lo - 1};
  if (mid == 0) return {CellKind::II0, lo + 1};
  return {CellKind::II2, lo + 1};  // mid == 2 && hi == lo
}

CellTag section2_tag(const Coloring& c) {
  if (c.label(1) == 0) return {CellKind::TypeI, 0};
  if (c.label(2) == 1) return {CellKind::TypeII, 0};
  return {CellKind::TypeIII, 0};
}

// Display order of the middle-vertex cells (levels not yet filtered for
// emptiness).
std::vector<CellTag> t_cell_candidates(long n) {
  std::vector<CellTag> order;
  const long a0 = (n % 2 == 1) ? 1 : 2;  // first I level
  for (long a = a0; a <= n - 2; a += 2) {
    order.push_back({CellKind::I0, a});
    order.push_back({CellKind::I2, a});
  }
  if (n % 2 == 1) {
    order.push_back({CellKind::II0, 1});
    for (long a = 1; a + 2 <= n; a += 2) {
      order.push_back({CellKind::II2, a});
      order.push_back({CellKind::II0, a + 2});
    }
  } else {
    for (long a = 0; a + 2 <= n; a += 2) {
      order.push_back({CellKind::II2, a});
      order.push_back({CellKind::II0, a + 2});
    }
  }
  return order;
}

std::vector<CellTag> y_cell_candidates(long n) {
  std::vector<CellTag> order;
  const long a0 = (n % 2 == 1) ? 1 : 2;
  for (long a = a0; a <= n - 2; a += 2) {
    order.push_back({CellKind::I0, a});
    order.push_back({CellKind::I2, a});
  }
  for (long a = a0; a <= n; a += 2) {
    order.push_back({CellKind::II0, a});
    order.push_back({CellKind::II2, a});
  }
  return order;
}

bool triple_ok(const Coloring& c, long r, BasisId id, long vertex) {
  // vertex i in 1..2n-2 joins a_{i-1} and a_i; for the Y basis the two
  // middle vertices are replaced by the fused pair.
  const long n = c.n;
  if (id == BasisId::Y && vertex == n - 1)
    return is_q_admissible(1, 1, c.label(n - 1), r);
  if (id == BasisId::Y && vertex == n)
    return is_q_admissible(c.label(n - 2), c.label(n - 1), c.label(n), r);
  return is_q_admissible(c.label(vertex - 1), 1, c.label(vertex), r);
}

void enumerate_rec(Coloring& c, long r, BasisId id, long pos,
                   std::vector<Coloring>& out) {
  const long last = 2 * c.n - 3;
  if (pos > last) {
    if (triple_ok(c, r, id, last + 1)) out.push_back(c);
    return;
  }
  const bool fused = (id == BasisId::Y && pos == c.n - 1);
  std::vector<long> candidates;
  if (fused) {
    candidates = {0, 2};
  } else {
    candidates = {c.label(pos - 1) - 1, c.label(pos - 1) + 1};
    if (id == BasisId::Y && pos == c.n) {
      // step relative to a_{n-2} across the fused vertex, whose edge
      // carries 0 or 2 rather than 1
      const long lo = c.label(c.n - 2);
      candidates = {lo - 2, lo, lo + 2};
    }
  }
  for (long v : candidates) {
    if (v < 0) continue;
    c.labels[pos - 1] = v;
    if (triple_ok(c, r, id, pos)) enumerate_rec(c, r, id, pos + 1, out);
  }
  c.labels[pos - 1] = 0;
}

}  // namespace

long Coloring::label(long i) const {
  if (i == 0 || i == 2 * n - 2) return 1;
  return labels.at(i - 1);
}

bool is_admissible(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a + b >= c && b + c >= a && c + a >= b;
}

bool is_q_admissible(long a, long b, long c, long r) {
  if (!is_admissible(a, b, c)) return false;
  return a <= r - 2 && b <= r - 2 && c <= r - 2 && a + b + c <= 2 * (r - 2);
}

std::string cell_name(const CellTag& tag, bool primed) {
  const char* p = primed ? "'" : "";
  switch (tag.kind) {
    case CellKind::TypeI:
      return "TypeI";
    case CellKind::TypeII:
      return "TypeII";
    case CellKind::TypeIII:
      return "TypeIII";
    case CellKind::I0:
      return "I" + std::string(p) + "0(" + std::to_string(tag.level) + ")";
    case CellKind::I2:
      return "I" + std::string(p) + "2(" + std::to_string(tag.level) + ")";
    case CellKind::II0:
      return "II" + std::string(p) + "0(" + std::to_string(tag.level) + ")";
    case CellKind::II2:
      return "II" + std::string(p) + "2(" + std::to_string(tag.level) + ")";
  }
  return "?";
}

BasisLayout enumerate_basis(BasisId id, long n, long r) {
  check_params(n, r);
  std::vector<Coloring> all;
  Coloring c{n, std::vector<long>(2 * n - 3, 0)};
  enumerate_rec(c, r, id, 1, all);

  BasisLayout layout;
  layout.id = id;
  layout.n = n;
  layout.r = r;

  std::map<CellTag, std::vector<Coloring>> cells;
  for (const auto& col : all) {
    CellTag tag;
    if (id == BasisId::Y)
      tag = y_cell_tag(col);
    else if (id == BasisId::T)
      tag = t_cell_tag(col);
    else
      tag = section2_tag(col);
    cells[tag].push_back(col);
  }
  for (auto& [tag, cols] : cells)
    std::sort(cols.begin(), cols.end(),
              [](const Coloring& a, const Coloring& b) {
                return a.labels < b.labels;
              });

  std::vector<CellTag> order;
  if (id == BasisId::Tprime) {
    order = {{CellKind::TypeI, 0}, {CellKind::TypeII, 0}, {CellKind::TypeIII, 0}};
  } else if (id == BasisId::T) {
    order = t_cell_candidates(n);
  } else {
    order = y_cell_candidates(n);
  }
  for (const auto& tag : order) {
    auto it = cells.find(tag);
    if (it == cells.end() || it->second.empty()) continue;
    layout.cell_order.push_back(tag);
    for (const auto& col : it->second) layout.entries.emplace_back(col, tag);
    cells.erase(it);
  }
  if (!cells.empty())
    throw std::logic_error("enumerate_basis: coloring outside the cell order");
  return layout;
}

Int CountProfile::k_aggregate(long m) const {
  Int sum = 0;
  const long a0 = (n % 2 == 1) ? 1 : 2;
  for (long a = a0; a <= m; a += 2) {
    auto it = k0.find(a);
    if (it != k0.end()) sum += it->second;
  }
  return 2 * sum;
}

Int CountProfile::cell_count(const CellTag& tag, bool primed) const {
  auto get = [](const std::map<long, Int>& m, long a) -> Int {
    auto it = m.find(a);
    return it == m.end() ? Int(0) : it->second;
  };
  switch (tag.kind) {
    case CellKind::TypeI:
    case CellKind::TypeII:
      return k;
    case CellKind::TypeIII:
      return k_prime;
    case CellKind::I0:
      return get(primed ? k0p : k0, tag.level);
    case CellKind::I2:
      return get(primed ? k2p : k2, tag.level);
    case CellKind::II0:
      return get(primed ? l0p : l0, tag.level);
    case CellKind::II2:
      return get(primed ? l2p : l2, tag.level);
  }
  return 0;
}

CountProfile count_profile(long n, long r) {
  check_params(n, r);
  static std::mutex mu;
  static std::map<std::pair<long, long>, CountProfile> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, r});
    if (it != cache.end()) return it->second;
  }

  PathCounts pc = path_counts(n, r);
  CountProfile profile;
  profile.n = n;
  profile.r = r;
  profile.total = at(pc.bwd, 0, 1);
  profile.k = at(pc.bwd, 1, 0);       // a_1 = 0 (then a_2 = 1)
  profile.k_prime = at(pc.bwd, 2, 3); // (a_1, a_2) = (2, 3)

  // Middle-vertex cells: counts factor through the labels at n-2 and n.
  // The B_Y level ranges one step past r-2 (the fused edge label is 0 there).
  for (long a = 0; a <= r - 1; ++a) {
    Int lo_m1 = at(pc.fwd, n - 2, a - 1), lo_p1 = at(pc.fwd, n - 2, a + 1);
    Int hi_m1 = at(pc.bwd, n, a - 1), hi_p1 = at(pc.bwd, n, a + 1);
    auto put = [a](std::map<long, Int>& m, const Int& v) {
      if (v > 0) m[a] = v;
    };
    if (a <= r - 2) {  // a is the strand label a_{n-1} for the B_T cells
      put(profile.k0, lo_m1 * hi_p1);
      put(profile.k2, lo_p1 * hi_m1);
      put(profile.l0, lo_m1 * hi_m1);
      put(profile.l2, lo_p1 * hi_p1);
    }
    // B_Y cells at level a pair labels (a-1, ., a+1) or (a-1, ., a-1),
    // gated by q-admissibility of the fused vertex.
    if (is_q_admissible(a - 1, 2, a + 1, r)) put(profile.k0p, lo_m1 * hi_p1);
    if (is_q_admissible(a + 1, 2, a - 1, r)) put(profile.k2p, lo_p1 * hi_m1);
    if (is_q_admissible(a - 1, 0, a - 1, r)) put(profile.l0p, lo_m1 * hi_m1);
    if (is_q_admissible(a - 1, 2, a - 1, r)) put(profile.l2p, lo_m1 * hi_m1);
  }
  if (r == 4 && profile.k_prime != 0)
    throw std::logic_error("count_profile: k' must vanish at r = 4");

  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, r), std::move(profile))
      .first->second;
}

std::set<long> attained_values(long n, long r, long position) {
  std::set<long> out;
  for (const auto& [v, cnt] : label_distribution(n, r, position))
    out.insert(v);
  return out;
}

std::map<long, Int> label_distribution(long n, long r, long position) {
  check_params(n, r);
  if (position < 1 || position > 2 * n - 3)
    throw std::invalid_argument("label position out of range");
  PathCounts pc = path_counts(n, r);
  std::map<long, Int> out;
  for (long v = 0; v <= r - 2; ++v) {
    Int cnt = at(pc.fwd, position, v) * at(pc.bwd, position, v);
    if (cnt > 0) out[v] = cnt;
  }
  return out;
}

std::vector<CellTag> layout_cells(BasisId id, long n, long r) {
  check_params(n, r);
  CountProfile counts = count_profile(n, r);
  std::vector<CellTag> candidates;
  if (id == BasisId::Tprime) {
    candidates = {{CellKind::TypeI, 0},
                  {CellKind::TypeII, 0},
                  {CellKind::TypeIII, 0}};
  } else if (id == BasisId::T) {
    candidates = t_cell_candidates(n);
  } else {
    candidates = y_cell_candidates(n);
  }
  std::vector<CellTag> out;
  for (const auto& tag : candidates)
    if (counts.cell_count(tag, id == BasisId::Y) > 0) out.push_back(tag);
  return out;
}

}  // namespace kb
