#pragma once

// Quantum determinant D, cofactor matrix T, the automorphism J and the
// verification of the Hopf algebra structure on A(c)[D^{-1}].

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qfa/frt.hpp"
#include "qfa/gbasis.hpp"
#include "qfa/nichols.hpp"

namespace qfa {

using PolyMatrix = std::vector<std::vector<NCPoly>>;

/// lambda(x_{j_1} ... x_{j_m}) = sum_K t_{j_1}^{k_1} ... t_{j_m}^{k_m} (x) x_K, extended
/// linearly to a tensor of degree m. Keys are (t-word, index of x_K).
std::map<std::pair<Word, std::size_t>, Scalar> coaction_expand(const std::vector<Scalar>& v, int n, int m);

/// D from the monomial volume representative.
NCPoly quantum_determinant(const WgfData& wgf);
/// D from an arbitrary representative of a nonzero top class, normalized so that the
/// result equals quantum_determinant(wgf) modulo the FRT ideal.
NCPoly quantum_determinant(const WgfData& wgf, const std::vector<Scalar>& representative);

/// T(k, j) = T_k^j, the coefficient of omega^k in lambda(omega^j).
PolyMatrix cofactor_matrix(const WgfData& wgf);

PolyMatrix apply_to_matrix(const std::vector<NCPoly>& images, const PolyMatrix& m);

struct Residuals {
  PolyMatrix entries;  // normal forms
  bool zero = true;
  bool decisive = true;
};

/// Normal forms of sum_k t_i^k T_k^j - delta_ij D.
Residuals verify_propfila(int n, const PolyMatrix& T, const NCPoly& D, const TruncatedGB& G);
/// Normal forms of sum_k J(T_i^k) t_k^j - delta_ij D.
Residuals verify_main_hypothesis(int n, const PolyMatrix& JT, const NCPoly& D, const TruncatedGB& G);

struct CommutationRule {
  char generator;
  NCPoly image;                      // J(t)
  std::optional<bool> certified;     // NF(D t - J(t) D) == 0, when requested
};

struct Normality {
  bool central = false;
  std::vector<CommutationRule> rules;  // only the generators with J(t) != t
};

Normality centrality_normality(int n, const NCPoly& D, const HayashiJ& J, const TruncatedGB* certify);

struct ZeroDivisor {
  char generator;
  bool left = false;   // g D == 0
  bool right = false;  // D g == 0
};

std::vector<ZeroDivisor> zero_divisors(int n, const NCPoly& D, const TruncatedGB& G);

struct AntipodeEntry {
  char generator;
  NCPoly numerator;  // S(t_i^j) = numerator * D^{-1}
};

/// Throws DomainError when the main hypothesis did not hold.
std::vector<AntipodeEntry> antipode_table(int n, const PolyMatrix& T, bool hypothesis_holds);

struct DiagonalCertificate {
  std::string statement;
  NCPoly element;
  bool applies = false;  // hypothesis of the lemma holds
  bool holds = false;    // element lies in the ideal
};

/// (t_i^j)^2 for i != j when q_jj^{-2} q_ii^2 != 1; t_i^k t_j^k and t_k^i t_k^j for i != j
/// when ord(q_kk) != 2.
std::vector<DiagonalCertificate> diagonal_certificates(const std::vector<std::vector<Scalar>>& q,
                                                       const TruncatedGB& G);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> relations;
};

struct LocalizationNote {
  bool group_algebra = false;
  int rank = 0;            // Z^rank
  std::string text;
};

struct QDetOptions {
  std::optional<IndexWord> volume;
  int max_degree = 8;
  std::size_t budget = kDefaultBudget;
  std::size_t max_dim = 800;
  bool certify_normality = false;
  /// When nonempty, the WGF algebra is T(V)/(algebra_relations) instead of the Nichols algebra.
  std::vector<std::pair<int, std::vector<Scalar>>> algebra_relations;
};

struct QDetReport {
  int n = 0;
  std::vector<std::size_t> hilbert;
  bool custom_algebra = false;
  std::optional<bool> algebra_subcomodule;  // set when custom_algebra
  std::string subcomodule_witness;
  TopResult top;
  FrtPresentation frt;
  int gb_degree = 0;
  bool gb_budget_exhausted = false;
  std::size_t gb_work = 0;
  NCPoly D;
  Scalar counit_D;
  PolyMatrix T;
  std::optional<HayashiJ> J;
  std::string J_error;
  PolyMatrix JT;
  Residuals propfila;
  Residuals main;
  bool hypothesis_holds = false;
  Normality normality;
  std::vector<ZeroDivisor> zero_divisors;
  std::vector<AntipodeEntry> antipode;
  Presentation hopf;
  std::optional<Presentation> sl;
  LocalizationNote localization;
  std::vector<DiagonalCertificate> diagonal;
};

/// Whether the ideal generated by the relations is stable under the coaction of A(c):
/// every relation must map into A(c) (x) (relation space) modulo the FRT ideal.
bool relations_are_subcomodule(const GradedNichols& b, const std::vector<std::pair<int, std::vector<Scalar>>>& rels,
                               const TruncatedGB& G, std::string* witness = nullptr);

/// The full pipeline on a braiding. diagonal_q, when given, enables the certificates
/// for diagonal braidings.
QDetReport run_qdet(const BraidingTensor& c, const QDetOptions& opt,
                    const std::optional<std::vector<std::vector<Scalar>>>& diagonal_q = std::nullopt);

/// Quotient of the algebra generated by t_i^j modulo the ideal together with the
/// zero-divisor generators, used to describe the localization.
LocalizationNote describe_localization(int n, const FrtPresentation& frt, const NCPoly& D,
                                       const std::vector<ZeroDivisor>& zd);

Presentation hopf_presentation(int n, const FrtPresentation& frt, const std::optional<HayashiJ>& J);
std::optional<Presentation> sl_presentation(int n, const FrtPresentation& frt, const NCPoly& D, bool central);

}  // namespace qfa
