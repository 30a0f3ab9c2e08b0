#include "kb/block_matrix.hpp"

#include <stdexcept>

namespace kb {

namespace {

// Dense Gaussian elimination over the cyclotomic field; used only on the
// small per-component grids (2x2 or 3x3 in practice).
std::vector<std::vector<CycloElem>> dense_inverse(
    std::vector<std::vector<CycloElem>> m, long modulus) {
  const long n = static_cast<long>(m.size());
  std::vector<std::vector<CycloElem>> inv(
      n, std::vector<CycloElem>(n, CycloElem::zero(modulus)));
  for (long i = 0; i < n; ++i) inv[i][i] = CycloElem::one(modulus);
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::domain_error("ScalarBlockMatrix: singular block");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    CycloElem inv_pivot = m[col][col].inverse();
    for (long j = 0; j < n; ++j) {
      m[col][j] *= inv_pivot;
      inv[col][j] *= inv_pivot;
    }
    for (long row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      CycloElem factor = m[row][col];
      for (long j = 0; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

CycloElem dense_determinant(std::vector<std::vector<CycloElem>> m,
                            long modulus) {
  const long n = static_cast<long>(m.size());
  CycloElem det = CycloElem::one(modulus);
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return CycloElem::zero(modulus);
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    CycloElem inv_pivot = m[col][col].inverse();
    for (long row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      CycloElem factor = m[row][col] * inv_pivot;
      for (long j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

}  // namespace

ScalarBlockMatrix::ScalarBlockMatrix(std::vector<BlockGroup> groups,
                                     long modulus)
    : modulus_(modulus), groups_(std::move(groups)) {
  for (const auto& g : groups_)
    if (g.size <= 0)
      throw std::invalid_argument("ScalarBlockMatrix: group sizes must be > 0");
  grid_.assign(groups_.size() * groups_.size(), std::nullopt);
}

ScalarBlockMatrix ScalarBlockMatrix::identity(std::vector<BlockGroup> groups,
                                              long modulus) {
  ScalarBlockMatrix m(std::move(groups), modulus);
  for (long i = 0; i < m.grid_size(); ++i)
    m.set_entry(i, i, CycloElem::one(modulus));
  return m;
}

Int ScalarBlockMatrix::dimension() const {
  Int total = 0;
  for (const auto& g : groups_) total += g.size;
  return total;
}

const std::optional<CycloElem>& ScalarBlockMatrix::entry(long i, long j) const {
  return grid_[i * grid_size() + j];
}

void ScalarBlockMatrix::set_entry(long i, long j, CycloElem value) {
  if (i != j && groups_[i].size != groups_[j].size)
    throw std::invalid_argument(
        "ScalarBlockMatrix: scalar block between groups of unequal size");
  grid_[i * grid_size() + j] = std::move(value);
}

CycloElem ScalarBlockMatrix::diagonal_scalar(long i) const {
  const auto& e = entry(i, i);
  return e ? *e : CycloElem::zero(modulus_);
}

ScalarBlockMatrix ScalarBlockMatrix::operator*(
    const ScalarBlockMatrix& rhs) const {
  if (groups_.size() != rhs.groups_.size())
    throw std::invalid_argument("ScalarBlockMatrix: layout mismatch");
  for (size_t i = 0; i < groups_.size(); ++i)
    if (groups_[i].size != rhs.groups_[i].size)
      throw std::invalid_argument("ScalarBlockMatrix: layout mismatch");
  const long n = grid_size();
  ScalarBlockMatrix out(groups_, modulus_);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      CycloElem acc = CycloElem::zero(modulus_);
      bool any = false;
      for (long k = 0; k < n; ++k) {
        const auto& a = entry(i, k);
        const auto& b = rhs.entry(k, j);
        if (!a || !b) continue;
        acc += *a * *b;
        any = true;
      }
      if (any && !acc.is_zero()) out.set_entry(i, j, std::move(acc));
    }
  return out;
}

std::vector<std::vector<long>> ScalarBlockMatrix::components() const {
  const long n = grid_size();
  std::vector<long> parent(n);
  for (long i = 0; i < n; ++i) parent[i] = i;
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j && entry(i, j) && !entry(i, j)->is_zero())
        parent[find(i)] = find(j);
  std::vector<std::vector<long>> comps(n);
  for (long i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<long>> out;
  for (auto& c : comps)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

ScalarBlockMatrix ScalarBlockMatrix::inverse() const {
  ScalarBlockMatrix out(groups_, modulus_);
  for (const auto& comp : components()) {
    const long m = static_cast<long>(comp.size());
    std::vector<std::vector<CycloElem>> dense(
        m, std::vector<CycloElem>(m, CycloElem::zero(modulus_)));
    for (long a = 0; a < m; ++a)
      for (long b = 0; b < m; ++b) {
        const auto& e = entry(comp[a], comp[b]);
        if (e) dense[a][b] = *e;
      }
    auto inv = dense_inverse(std::move(dense), modulus_);
    for (long a = 0; a < m; ++a)
      for (long b = 0; b < m; ++b)
        if (!inv[a][b].is_zero()) out.set_entry(comp[a], comp[b], inv[a][b]);
  }
  return out;
}

ScalarBlockMatrix ScalarBlockMatrix::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  ScalarBlockMatrix result = identity(groups_, modulus_);
  ScalarBlockMatrix base = *this;
  long e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

CycloElem ScalarBlockMatrix::trace() const {
  CycloElem acc = CycloElem::zero(modulus_);
  for (long i = 0; i < grid_size(); ++i) {
    const auto& e = entry(i, i);
    if (e) acc += Rational(groups_[i].size) * *e;
  }
  return acc;
}

CycloElem ScalarBlockMatrix::determinant() const {
  CycloElem det = CycloElem::one(modulus_);
  for (const auto& comp : components()) {
    const long m = static_cast<long>(comp.size());
    std::vector<std::vector<CycloElem>> dense(
        m, std::vector<CycloElem>(m, CycloElem::zero(modulus_)));
    for (long a = 0; a < m; ++a)
      for (long b = 0; b < m; ++b) {
        const auto& e = entry(comp[a], comp[b]);
        if (e) dense[a][b] = *e;
      }
    CycloElem comp_det = dense_determinant(std::move(dense), modulus_);
    det *= comp_det.pow(groups_[comp[0]].size);
  }
  return det;
}

bool ScalarBlockMatrix::is_identity() const {
  CycloElem c = CycloElem::zero(modulus_);
  return is_scalar(&c) && c.is_one();
}

bool ScalarBlockMatrix::is_scalar(CycloElem* scalar_out) const {
  const long n = grid_size();
  if (n == 0) return true;
  CycloElem first = diagonal_scalar(0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) {
        if (diagonal_scalar(i) != first) return false;
      } else if (entry(i, j) && !entry(i, j)->is_zero()) {
        return false;
      }
    }
  if (scalar_out) *scalar_out = first;
  return true;
}

ScalarBlockMatrix ScalarBlockMatrix::map_entries(
    const std::function<CycloElem(const CycloElem&)>& f) const {
  ScalarBlockMatrix out(groups_, modulus_);
  const long n = grid_size();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const auto& e = entry(i, j);
      if (e) out.set_entry(i, j, f(*e));
    }
  return out;
}

ScalarBlockMatrix ScalarBlockMatrix::direct_sum(const ScalarBlockMatrix& a,
                                                const ScalarBlockMatrix& b) {
  if (a.modulus_ != b.modulus_)
    throw std::invalid_argument("direct_sum: modulus mismatch");
  std::vector<BlockGroup> groups = a.groups_;
  groups.insert(groups.end(), b.groups_.begin(), b.groups_.end());
  ScalarBlockMatrix out(std::move(groups), a.modulus_);
  const long na = a.grid_size(), nb = b.grid_size();
  for (long i = 0; i < na; ++i)
    for (long j = 0; j < na; ++j)
      if (a.entry(i, j)) out.set_entry(i, j, *a.entry(i, j));
  for (long i = 0; i < nb; ++i)
    for (long j = 0; j < nb; ++j)
      if (b.entry(i, j)) out.set_entry(na + i, na + j, *b.entry(i, j));
  return out;
}

bool operator==(const ScalarBlockMatrix& a, const ScalarBlockMatrix& b) {
  if (a.modulus_ != b.modulus_ || a.groups_.size() != b.groups_.size())
    return false;
  for (size_t i = 0; i < a.groups_.size(); ++i)
    if (a.groups_[i].size != b.groups_[i].size) return false;
  const long n = a.grid_size();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      CycloElem ea = a.entry(i, j) ? *a.entry(i, j) : CycloElem::zero(a.modulus_);
      CycloElem eb = b.entry(i, j) ? *b.entry(i, j) : CycloElem::zero(b.modulus_);
      if (ea != eb) return false;
    }
  return true;
}

}  // namespace kb
