#include "qfa/braiding.hpp"

#include <algorithm>
#include <numeric>

namespace qfa {

std::size_t tensor_dim(int n, int d) {
  std::size_t r = 1;
  for (int i = 0; i < d; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

BraidingTensor::BraidingTensor(int n)
    : n_(n), c_(tensor_dim(n, 4)), sparse_(static_cast<std::size_t>(n) * n) {
  if (n < 1) throw DomainError("braiding dimension must be positive");
}

void BraidingTensor::set(int i, int j, int k, int l, const Scalar& v) {
  if (i < 0 || j < 0 || k < 0 || l < 0 || i >= n_ || j >= n_ || k >= n_ || l >= n_) {
    throw DomainError("braiding index out of range: (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "," + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
  }
  c_[index(i, j, k, l)] = v;
  auto& terms = sparse_[i * n_ + j];
  terms.erase(std::remove_if(terms.begin(), terms.end(), [&](const BraidTerm& t) { return t.k == k && t.l == l; }),
              terms.end());
  if (!v.is_zero()) {
    terms.push_back({k, l, v});
    std::sort(terms.begin(), terms.end(),
              [](const BraidTerm& a, const BraidTerm& b) { return a.k != b.k ? a.k < b.k : a.l < b.l; });
  }
}

BraidingTensor BraidingTensor::flip(int n) {
  BraidingTensor c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c.set(i, j, j, i, Scalar(1L));
  }
  return c;
}

BraidingTensor BraidingTensor::diagonal(const std::vector<std::vector<Scalar>>& q) {
  const int n = static_cast<int>(q.size());
  BraidingTensor c(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(q[i].size()) != n) throw DomainError("diagonal braiding: q must be square");
    for (int j = 0; j < n; ++j) {
      if (q[i][j].is_zero()) {
        throw DomainError("diagonal braiding: q(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is zero");
      }
      c.set(i, j, j, i, q[i][j]);
    }
  }
  return c;
}

BraidingTensor BraidingTensor::from_set_solution(const SetSolution& sol, const Cocycle& q) {
  BraidingTensor c(sol.n);
  for (int i = 0; i < sol.n; ++i) {
    for (int j = 0; j < sol.n; ++j) c.set(i, j, sol.g(i, j), sol.f(j, i), q(i, j));
  }
  return c;
}

BraidingTensor BraidingTensor::from_rack(const Rack& rack, const Cocycle& q) {
  return from_set_solution(rack.as_solution(), q);
}

BraidingTensor BraidingTensor::scaled(const Scalar& q) const {
  BraidingTensor r = *this;
  for (auto& x : r.c_) x *= q;
  for (auto& terms : r.sparse_) {
    for (auto& t : terms) t.coeff *= q;
    if (q.is_zero()) terms.clear();
  }
  return r;
}

Matrix BraidingTensor::matrix() const {
  const std::size_t nn = static_cast<std::size_t>(n_) * n_;
  Matrix m(nn, nn);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (const auto& t : image(i, j)) m(t.k * n_ + t.l, i * n_ + j) = t.coeff;
    }
  }
  return m;
}

int BraidingTensor::conductor() const {
  int m = 1;
  for (const auto& terms : sparse_) {
    for (const auto& t : terms) m = std::lcm(m, t.coeff.conductor());
  }
  return m;
}

namespace {

// Applies c at slot k (0-based, acting on positions k, k+1) of V^{(x)d} to a sparse vector.
SparseVec apply_slot(const BraidingTensor& c, int d, int k, const SparseVec& v) {
  const int n = c.n();
  const std::size_t low = tensor_dim(n, d - k - 2);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (const auto& [w, a] : v) {
    const std::size_t hi = w / (low * nn);
    const std::size_t pair = (w / low) % nn;
    const std::size_t lo = w % low;
    const int i = static_cast<int>(pair / n);
    const int j = static_cast<int>(pair % n);
    for (const auto& t : c.image(i, j)) {
      out.emplace_back((hi * nn + static_cast<std::size_t>(t.k * n + t.l)) * low + lo, a * t.coeff);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second.is_zero(); }),
               merged.end());
  return merged;
}

std::string basis_word(std::size_t w, int n, int d) {
  std::string s;
  for (int p = d - 1; p >= 0; --p) {
    s = "x" + std::to_string(w % n + 1) + s;
    w /= n;
  }
  return s;
}

}  // namespace

SparseVec apply_generator(const BraidingTensor& c, int d, int k, const SparseVec& v) {
  if (k < 1 || k > d - 1) throw DomainError("braid generator index out of range");
  return apply_slot(c, d, k - 1, v);
}

BraidCheck check_braid_equation(const BraidingTensor& c) {
  const int n = c.n();
  BraidCheck res;
  for (std::size_t w = 0; w < tensor_dim(n, 3); ++w) {
    const SparseVec e{{w, Scalar(1L)}};
    const SparseVec lhs = apply_slot(c, 3, 0, apply_slot(c, 3, 1, apply_slot(c, 3, 0, e)));
    const SparseVec rhs = apply_slot(c, 3, 1, apply_slot(c, 3, 0, apply_slot(c, 3, 1, e)));
    bool same = lhs.size() == rhs.size();
    for (std::size_t t = 0; same && t < lhs.size(); ++t) {
      same = lhs[t].first == rhs[t].first && lhs[t].second == rhs[t].second;
    }
    if (!same) {
      res.ok = false;
      const int i = static_cast<int>(w / (n * n));
      const int j = static_cast<int>((w / n) % n);
      const int k = static_cast<int>(w % n);
      res.witness = std::array<int, 3>{i + 1, j + 1, k + 1};
      res.detail = "(c(x)id)(id(x)c)(c(x)id) and (id(x)c)(c(x)id)(id(x)c) differ on " + basis_word(w, n, 3);
      return res;
    }
  }
  return res;
}

Matrix c_flat_matrix(const BraidingTensor& c) {
  const int n = c.n();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  Matrix m(nn, nn);
  // column (j,k) <-> x_j* (x) x_k, row (b,i) <-> x_b (x) x_i*.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int b = 0; b < n; ++b) m(b * n + i, j * n + k) = c(k, i, j, b);
      }
    }
  }
  return m;
}

RigidCheck check_rigid(const BraidingTensor& c) {
  RigidCheck res;
  const Matrix m = c_flat_matrix(c);
  const Subspace k = kernel(m);
  if (k.dim() == 0) return res;
  res.ok = false;
  const int n = c.n();
  std::string w;
  for (std::size_t idx = 0; idx < k.ambient_dim; ++idx) {
    const Scalar& a = k.basis[0][idx];
    if (a.is_zero()) continue;
    if (!w.empty()) w += " + ";
    w += "(" + a.to_string() + ")*x" + std::to_string(idx / n + 1) + "*(x)x" + std::to_string(idx % n + 1);
  }
  res.witness = "c_flat has a kernel of dimension " + std::to_string(k.dim()) + ", e.g. " + w;
  return res;
}

Matrix braid_generator_action(const BraidingTensor& c, int d, int k) {
  if (k < 1 || k > d - 1) throw DomainError("braid generator index out of range");
  const std::size_t dim = tensor_dim(c.n(), d);
  Matrix m(dim, dim);
  for (std::size_t w = 0; w < dim; ++w) {
    for (const auto& [row, a] : apply_slot(c, d, k - 1, SparseVec{{w, Scalar(1L)}})) m(row, w) = a;
  }
  return m;
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inv;
    }
  }
  return inv;
}

PermWord reduced_word(const std::vector<int>& perm, ReductionStrategy strategy) {
  PermWord pw;
  pw.perm = perm;
  std::vector<int> p = perm;
  const int d = static_cast<int>(p.size());
  std::vector<int> rev;
  // sigma = (sigma o s_i) o s_i; peel simple transpositions off the right.
  while (true) {
    int found = -1;
    if (strategy == ReductionStrategy::FirstDescent) {
      for (int i = 0; i + 1 < d && found < 0; ++i) {
        if (p[i] > p[i + 1]) found = i;
      }
    } else {
      for (int i = d - 2; i >= 0 && found < 0; --i) {
        if (p[i] > p[i + 1]) found = i;
      }
    }
    if (found < 0) break;
    std::swap(p[found], p[found + 1]);
    rev.push_back(found + 1);
  }
  pw.word.assign(rev.rbegin(), rev.rend());
  return pw;
}

std::vector<std::vector<int>> all_permutations(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Matrix matsumoto_lift(const BraidingTensor& c, const PermWord& sigma, int d) {
  Matrix m = Matrix::identity(tensor_dim(c.n(), d));
  for (int a : sigma.word) m = m * braid_generator_action(c, d, a);
  return m;
}

}  // namespace qfa
