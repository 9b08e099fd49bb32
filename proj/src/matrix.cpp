#include "qfa/matrix.hpp"

#include <cassert>
#include <sstream>

namespace qfa {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1L);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(a_.begin() + static_cast<long>(i * cols_),
                             a_.begin() + static_cast<long>((i + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: dimension mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference: dimension mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DomainError("matrix apply: dimension mismatch");
  std::vector<Scalar> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Echelon rref(const Matrix& m) {
  Echelon e;
  e.reduced = m;
  Matrix& a = e.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> w) const {
  if (w.size() != ambient_dim) throw DomainError("subspace reduction: dimension mismatch");
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Scalar f = w[pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (!basis[r][j].is_zero()) w[j] -= f * basis[r][j];
    }
  }
  return w;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  for (const auto& x : reduce(v)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Scalar>>& vectors) {
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw DomainError("span: dimension mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  }
  const Echelon e = rref(m);
  Subspace s;
  s.ambient_dim = ambient_dim;
  s.pivots = e.pivots;
  for (std::size_t r = 0; r < e.rank; ++r) s.basis.push_back(e.reduced.row(r));
  return s;
}

Subspace kernel(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> vecs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = Scalar(1L);
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, f);
    vecs.push_back(std::move(v));
  }
  Subspace k = span(cols, vecs);
  assert(k.dim() + e.rank == cols);
  return k;
}

Subspace image(const Matrix& m) {
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return span(m.rows(), cols);
}

SolveResult solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw DomainError("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(aug);
  SolveResult res;
  res.kernel = kernel(a);
  res.unique = res.kernel.dim() == 0;
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return res;
  std::vector<Scalar> x(a.cols());
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  res.solution = std::move(x);
  return res;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("invert: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1L);
  }
  const Echelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1) {
    const Subspace k = kernel(m);
    std::string witness = k.dim() ? "[" : "";
    if (k.dim()) {
      for (std::size_t j = 0; j < n; ++j) witness += (j ? ", " : "") + k.basis[0][j].to_string();
      witness += "]";
    }
    throw DomainError("matrix is singular; kernel vector " + witness);
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix is not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det(1L);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<Scalar> QuotientMap::coords(std::vector<Scalar> v) const {
  if (v.size() != ambient_dim) throw DomainError("quotient coordinates: dimension mismatch");
  v = k.reduce(std::move(v));
  std::vector<Scalar> out;
  out.reserve(complement.size());
  for (auto idx : complement) out.push_back(v[idx]);
  return out;
}

QuotientMap quotient_coords(std::size_t ambient_dim, const Subspace& k) {
  QuotientMap q;
  q.ambient_dim = ambient_dim;
  q.k = k;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : k.pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (!is_pivot[i]) q.complement.push_back(i);
  }
  return q;
}

}  // namespace qfa
