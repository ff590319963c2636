#include "ezdlab/exactmat.hpp"

#include <stdexcept>
#include <utility>

namespace ezdlab {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: dimension mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (entries_[r * cols_ + c] != 0 && v[c] != 0) out[r] += entries_[r * cols_ + c] * v[c];
  return out;
}

RrefResult rref(QMatrix m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(lead, k));
    if (m(lead, c) != 1) {
      const Rational inv = 1 / m(lead, c);
      for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (m(lead, k) != 0) m(r, k) -= factor * m(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  Subspace s(ambient_dim);
  if (generators.empty()) return s;
  auto [reduced, pivots] = rref(QMatrix::from_rows(generators, ambient_dim));
  if (reduced.cols() != ambient_dim) throw std::invalid_argument("Subspace::span: generator length mismatch");
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    auto r = reduced.row(i);
    s.basis_.emplace_back(r.begin(), r.end());
  }
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector e(ambient_dim, Rational(0));
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
  Rational factor;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p] == 0) continue;
    factor = v[p];
    for (std::size_t k = p; k < ambient_dim_; ++k)
      if (basis_[i][k] != 0) v[k] -= factor * basis_[i][k];
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> generators;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, f);
    generators.push_back(std::move(v));
  }
  return Subspace::span(cols, generators);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  return a == b;
}

}  // namespace ezdlab
