#pragma once

#include "ezdlab/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ezdlab {

/// Dense row-major matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  /// All rows must have the same length; an empty list gives a 0 x cols matrix.
  static QMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  /// m * v for a column vector v of length cols().
  Vector apply(std::span<const Rational> v) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The output is the
/// unique canonical form: pivot entries 1, zeros above and below pivots,
/// zero rows at the bottom.
RrefResult rref(QMatrix m);

std::size_t rank(const QMatrix& m);

/// A linear subspace of Q^ambient_dim stored by its canonical echelon basis,
/// so two subspaces are equal exactly when their bases are.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the echelon basis; the residue is zero iff v lies in the span.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}; dimension is cols - rank.
Subspace kernel_basis(const QMatrix& m);

/// Throws std::invalid_argument when the ambient dimensions differ.
bool subspace_equal(const Subspace& a, const Subspace& b);

}  // namespace ezdlab
