#pragma once

// Shared helpers for the test binaries: corpus access and a pipeline run that
// keeps the Groebner basis around for ideal-membership checks.

#include <string>
#include <vector>

#include "qfa/gbasis.hpp"
#include "qfa/ncpoly.hpp"
#include "qfa/qdet.hpp"
#include "qfa/spec.hpp"

#ifndef QFA_CORPUS_DIR
#define QFA_CORPUS_DIR "corpus"
#endif

namespace qfa::testing {

inline std::string corpus_path(const std::string& name) { return std::string(QFA_CORPUS_DIR) + "/" + name + ".json"; }

inline BraidingSpec corpus_spec(const std::string& name) { return load_spec(corpus_path(name)); }

struct Run {
  BraidingSpec spec;
  BraidingTensor c;
  QDetReport rep;
  TruncatedGB G;  // FRT ideal through gb_degree
  int n = 0;

  /// p is in the FRT ideal (decisively).
  bool zero(const NCPoly& p) const {
    const NormalForm nf = G.normal_form(p);
    return nf.decisive && nf.remainder.is_zero();
  }
  bool same(const NCPoly& a, const NCPoly& b) const { return zero(a - b); }
  NCPoly poly(const std::string& text) const { return parse_ncpoly(text, n); }
  NCPoly gen(char letter) const { return NCPoly::monomial(Word(1, static_cast<char>(letter - 'a'))); }
};

Run run_corpus(const std::string& name, bool certify = true, int gb_degree = 0);

/// sum_sigma sign(sigma) t_1^{sigma(1)} ... t_n^{sigma(n)}.
NCPoly alternating_determinant(int n);

}  // namespace qfa::testing
