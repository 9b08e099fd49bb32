#pragma once

// Dense exact linear algebra over cyclotomic fields.

#include <optional>
#include <string>
#include <vector>

#include "qfa/scalar.hpp"

namespace qfa {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;
  std::vector<Scalar> column(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination.
Echelon rref(const Matrix& m);

/// A subspace of k^ambient_dim given by a basis in reduced echelon form.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Scalar>> basis;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.size(); }
  bool contains(const std::vector<Scalar>& v) const;
  /// v minus its projection along the echelon basis; zero iff v lies in the subspace.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
};

/// Span of the given vectors (as columns of nothing in particular).
Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Scalar>>& vectors);

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

struct SolveResult {
  std::optional<std::vector<Scalar>> solution;
  Subspace kernel;
  bool unique = false;
};

SolveResult solve(const Matrix& a, const std::vector<Scalar>& b);

/// Throws DomainError carrying a kernel vector when singular.
Matrix invert(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Coordinates on V/K: the complement is spanned by the standard basis vectors
/// at non-pivot positions of K's echelon basis.
struct QuotientMap {
  std::size_t ambient_dim = 0;
  Subspace k;
  std::vector<std::size_t> complement;  // ambient indices of representatives

  std::size_t dim() const { return complement.size(); }
  /// Coordinates of the class of v relative to the complement basis.
  std::vector<Scalar> coords(std::vector<Scalar> v) const;
};

QuotientMap quotient_coords(std::size_t ambient_dim, const Subspace& k);

}  // namespace qfa
