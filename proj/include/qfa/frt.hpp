#pragma once

// The FRT bialgebra A(c): relations, the coquasitriangular form r and the
// automorphism J attached to a group-like element.

#include <map>
#include <vector>

#include "qfa/braiding.hpp"
#include "qfa/gbasis.hpp"
#include "qfa/matrix.hpp"
#include "qfa/ncpoly.hpp"

namespace qfa {

struct FrtPresentation {
  int n = 0;
  BraidingTensor braiding;
  std::vector<NCPoly> relations;  // interreduced, monic, degree 2
};

/// sum_{k,l} c_{ij}^{kl} t_k^r t_l^s - sum_{k,l} c_{kl}^{rs} t_i^k t_j^l (0-based indices).
NCPoly frt_relation(const BraidingTensor& c, int i, int j, int r, int s);
FrtPresentation frt_relations(const BraidingTensor& c);

class RForm {
 public:
  explicit RForm(const BraidingTensor& c);

  /// M(g)_{i,k} = r(t_i^k, g) for a generator g.
  const Matrix& right_matrix(char g) const { return right_[static_cast<unsigned char>(g)]; }
  /// N(g)_{x,y} = r(g, t_x^y) for a generator g.
  const Matrix& left_matrix(char g) const { return left_[static_cast<unsigned char>(g)]; }

  /// r(t_i^a, v) for all i, a, as the matrix R_v.
  Matrix against_right(const Word& v) const;
  Matrix against_right(const NCPoly& v) const;
  /// r(u, t_j^l) for all j, l, as the matrix L_u.
  Matrix against_left(const Word& u) const;
  Matrix against_left(const NCPoly& u) const;

  Scalar eval(const Word& u, const Word& v) const;
  Scalar eval(const NCPoly& u, const NCPoly& v) const;

  int n() const { return n_; }

 private:
  int n_;
  std::vector<Matrix> right_;
  std::vector<Matrix> left_;
  mutable std::map<std::pair<Word, Word>, Scalar> memo_;
};

struct HayashiJ {
  Matrix R;     // R_{ia} = r(t_i^a, D)
  Matrix Rinv;
  /// Images J(t_i^j), indexed by generator letter.
  std::vector<NCPoly> images;
  /// Column i*n+j holds the coefficients of J(t_i^j) on the generators.
  Matrix on_generators;
  bool identity = false;
};

/// J(t_i^j) = sum_{a,b} R_{ia} (R^{-1})_{bj} t_a^b. Throws DomainError if R is singular.
HayashiJ hayashi_J(const RForm& r, const NCPoly& D);

/// Applies an algebra map given on generators.
NCPoly apply_on_generators(const std::vector<NCPoly>& images, const NCPoly& p);

/// The generator-level exchange identity
/// sum r(t_i^k, t_j^l) t_k^p t_l^q = sum t_j^l t_i^k r(t_k^p, t_l^q), as a degree-2 element
/// which must lie in the FRT ideal.
NCPoly exchange_defect(const RForm& r, int i, int j, int p, int q);

}  // namespace qfa
