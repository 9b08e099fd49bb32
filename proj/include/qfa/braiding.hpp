#pragma once

// Braided vector spaces (V, c) and the braid group action on tensor powers.
//
// Basis words of V^{(x)d} are indexed lexicographically: the word
// (w_1, ..., w_d) has index sum w_p n^(d-p), so position 1 is most significant.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qfa/matrix.hpp"
#include "qfa/set_solution.hpp"

namespace qfa {

struct BraidTerm {
  int k;
  int l;
  Scalar coeff;
};

class BraidingTensor {
 public:
  BraidingTensor() = default;
  explicit BraidingTensor(int n);

  static BraidingTensor flip(int n);
  /// c(x_i (x) x_j) = q_ij x_j (x) x_i.
  static BraidingTensor diagonal(const std::vector<std::vector<Scalar>>& q);
  /// c(x_i (x) x_j) = q_ij x_{g_i(j)} (x) x_{f_j(i)}.
  static BraidingTensor from_set_solution(const SetSolution& sol, const Cocycle& q);
  /// c(x_i (x) x_j) = q_ij x_{i |> j} (x) x_i.
  static BraidingTensor from_rack(const Rack& rack, const Cocycle& q);

  int n() const { return n_; }

  /// Coefficient of x_k (x) x_l in c(x_i (x) x_j), 0-based.
  const Scalar& operator()(int i, int j, int k, int l) const { return c_[index(i, j, k, l)]; }
  void set(int i, int j, int k, int l, const Scalar& v);

  /// Nonzero terms of c(x_i (x) x_j).
  const std::vector<BraidTerm>& image(int i, int j) const { return sparse_[i * n_ + j]; }

  BraidingTensor scaled(const Scalar& q) const;
  BraidingTensor negated() const { return scaled(Scalar(-1L)); }

  /// n^2 x n^2 matrix; column i*n+j holds c(x_i (x) x_j).
  Matrix matrix() const;

  /// lcm of the conductors of all entries.
  int conductor() const;

  friend bool operator==(const BraidingTensor& a, const BraidingTensor& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }

  int n_ = 0;
  std::vector<Scalar> c_;
  std::vector<std::vector<BraidTerm>> sparse_;
};

struct BraidCheck {
  bool ok = true;
  std::optional<std::array<int, 3>> witness;  // 1-based basis triple
  std::string detail;
};

BraidCheck check_braid_equation(const BraidingTensor& c);

struct RigidCheck {
  bool ok = true;
  std::string witness;
};

/// Invertibility of c_flat(x_j* (x) x_k) = sum_{i,b} c_{ki}^{jb} x_b (x) x_i*.
RigidCheck check_rigid(const BraidingTensor& c);
Matrix c_flat_matrix(const BraidingTensor& c);

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// id^{k-1} (x) c (x) id^{d-k-1} applied to a sparse vector sorted by index; k is 1-based.
SparseVec apply_generator(const BraidingTensor& c, int d, int k, const SparseVec& v);

/// Matrix of id^{k-1} (x) c (x) id^{d-k-1} on V^{(x)d}; k is 1-based.
Matrix braid_generator_action(const BraidingTensor& c, int d, int k);

/// A permutation of {1..d} (stored 0-based: perm[p] = sigma(p)) with a reduced word
/// of simple transpositions s_a (a 1-based) such that sigma = s_{a_1} o ... o s_{a_m}.
struct PermWord {
  std::vector<int> perm;
  std::vector<int> word;
};

enum class ReductionStrategy { FirstDescent, LastDescent };

PermWord reduced_word(const std::vector<int>& perm, ReductionStrategy strategy = ReductionStrategy::FirstDescent);
int inversion_count(const std::vector<int>& perm);
/// All permutations of {0..d-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int d);

/// Product rho(s_{a_1}) ... rho(s_{a_m}); for the flip this is the place permutation
/// sending the letter at position p to position sigma(p).
Matrix matsumoto_lift(const BraidingTensor& c, const PermWord& sigma, int d);

/// n^d.
std::size_t tensor_dim(int n, int d);

}  // namespace qfa
