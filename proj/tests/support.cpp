#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "qfa/braiding.hpp"

namespace qfa::testing {

Run run_corpus(const std::string& name, bool certify, int gb_degree) {
  Run r;
  r.spec = corpus_spec(name);
  r.c = build_braiding(r.spec);
  r.n = r.c.n();
  QDetOptions opt;
  if (r.spec.volume) opt.volume = parse_index_word(*r.spec.volume, r.n);
  if (r.spec.max_degree) opt.max_degree = *r.spec.max_degree;
  opt.certify_normality = certify;
  opt.algebra_relations = algebra_relations(r.spec);
  r.rep = run_qdet(r.c, opt, diagonal_q(r.spec));
  const int deg = std::max(gb_degree, std::max(r.rep.gb_degree, 2));
  r.G = complete(r.rep.frt.relations, deg);
  return r;
}

NCPoly alternating_determinant(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly D;
  do {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(gen_letter(i, perm[i], n));
    D.add_term(w, Scalar(inversion_count(perm) % 2 == 0 ? 1L : -1L));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return D;
}

}  // namespace qfa::testing
