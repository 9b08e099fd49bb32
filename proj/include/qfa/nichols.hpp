#pragma once

// Degree-by-degree data of the Nichols algebra B(V,c) = T(V) / (+ Ker QS_d).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfa/braiding.hpp"
#include "qfa/matrix.hpp"

namespace qfa {

/// An index word x_{w_1} ... x_{w_d} (0-based letters).
using IndexWord = std::vector<int>;

std::size_t word_index(const IndexWord& w, int n);
IndexWord index_word(std::size_t idx, int n, int d);
/// "x1x2x3x2" style for any n; "x^2yxy^2" style (letters x, y, z) when n <= 3 and pretty is set.
std::string index_word_to_string(const IndexWord& w, int n, bool pretty = false);
/// Accepts "x1x2x3x2", "x_1 x_2", and for n <= 3 the letters x, y, z with optional ^k.
IndexWord parse_index_word(std::string_view text, int n);

/// A tensor in V^{(x)d}, as dense coordinates in the lexicographic word basis.
std::string tensor_to_string(const std::vector<Scalar>& v, int n, int d, bool pretty = false);

struct NicholsDegree {
  int d = 0;
  Matrix qs;                    // QS_d
  Subspace kernel;              // Ker QS_d
  std::size_t rank = 0;         // dim B^d
  QuotientMap quotient;         // coordinates on V^d / Ker QS_d
  Subspace inherited;           // V Ker_{d-1} + Ker_{d-1} V
  std::vector<std::vector<Scalar>> new_relations;  // complement of inherited in kernel
};

/// Sparse-column computation of QS_d = sum_k rho(s_k) ... rho(s_{d-1}) (QS_{d-1} (x) id).
Matrix qs_matrix(const BraidingTensor& c, int d);
/// Sum of Matsumoto lifts over all of S_d; the brute-force oracle for qs_matrix.
Matrix qs_matrix_bruteforce(const BraidingTensor& c, int d);

class GradedNichols {
 public:
  /// Computes degrees 0..max_degree, stopping early after the first degree with
  /// dim B^d = 0 or before the first degree whose tensor power exceeds max_dim.
  GradedNichols(const BraidingTensor& c, int max_degree, std::size_t max_dim = 800);

  /// The graded algebra T(V) / (relations), for an algebra given by a presentation
  /// rather than a braiding. Each relation is a homogeneous tensor (degree, coordinates).
  /// The qs matrices are left empty.
  static GradedNichols from_relations(int n, const std::vector<std::pair<int, std::vector<Scalar>>>& relations,
                                      int max_degree, std::size_t max_dim = 800);

  int n() const { return n_; }
  int computed_through() const { return static_cast<int>(degrees_.size()) - 1; }
  bool hit_size_cap() const { return capped_; }
  bool reached_zero() const { return reached_zero_; }
  const NicholsDegree& degree(int d) const { return degrees_.at(static_cast<std::size_t>(d)); }
  std::vector<std::size_t> hilbert() const;

  /// Coordinates of the class of a tensor of degree d.
  std::vector<Scalar> class_of(const std::vector<Scalar>& v, int d) const;
  std::vector<Scalar> class_of_word(const IndexWord& w) const;
  /// Quotient coordinates of the concatenation of two representatives.
  std::vector<Scalar> class_product(const std::vector<Scalar>& u, int a, const std::vector<Scalar>& v, int b) const;

  /// Representative words of the quotient basis in degree d.
  std::vector<IndexWord> basis_words(int d) const;

 private:
  explicit GradedNichols(int n) : n_(n) {}
  void push_degree(NicholsDegree nd, const std::vector<std::vector<Scalar>>& extra);

  int n_;
  std::vector<NicholsDegree> degrees_;
  bool capped_ = false;
  bool reached_zero_ = false;
};

/// Tensor product of two coordinate vectors: words concatenated.
std::vector<Scalar> concat_tensor(const std::vector<Scalar>& u, const std::vector<Scalar>& v);

struct WgfData {
  int n = 0;
  int top = 0;
  IndexWord volume;                   // monomial representative of the volume class
  std::vector<Scalar> alpha;          // alpha_K for every word K of degree top
  std::vector<IndexWord> dual_reps;   // basis words w_b of B^{top-1}
  Matrix left_pairing;                // P_{i,b} = alpha(x_i w_b)
  Matrix right_pairing;               // Q_{b,i} = alpha(w_b x_i)
  std::vector<std::vector<Scalar>> left_duals;   // omega^j in V^{(x)(top-1)}
  std::vector<std::vector<Scalar>> right_duals;  // w_r^j in V^{(x)(top-1)}

  const Scalar& alpha_of(const IndexWord& k) const { return alpha[word_index(k, n)]; }
};

struct TopResult {
  enum class Status { Found, Inconclusive, WgfFailure } status = Status::Inconclusive;
  std::optional<WgfData> wgf;
  std::string message;
};

/// Smallest N with dim B^N = 1 and dim B^{N+1} = 0 among the computed degrees, and the
/// dual bases. The volume defaults to the lexicographically smallest word with nonzero class.
TopResult detect_top(const GradedNichols& b, const std::optional<IndexWord>& volume = std::nullopt);

}  // namespace qfa
