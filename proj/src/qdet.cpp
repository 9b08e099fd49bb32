#include "qfa/qdet.hpp"

#include <algorithm>
#include <set>

namespace qfa {

std::map<std::pair<Word, std::size_t>, Scalar> coaction_expand(const std::vector<Scalar>& v, int n, int m) {
  std::map<std::pair<Word, std::size_t>, Scalar> out;
  const std::size_t dim = tensor_dim(n, m);
  if (v.size() != dim) throw DomainError("coaction_expand: tensor has the wrong size");
  for (std::size_t j = 0; j < dim; ++j) {
    if (v[j].is_zero()) continue;
    const IndexWord J = index_word(j, n, m);
    for (std::size_t k = 0; k < dim; ++k) {
      const IndexWord K = index_word(k, n, m);
      Word w(static_cast<std::size_t>(m), 0);
      for (int p = 0; p < m; ++p) w[p] = gen_letter(J[p], K[p], n);
      out[{w, k}] += v[j];
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

namespace {

// sum_K coef(K) t_J^K for a fixed row word J.
void add_row_word(NCPoly& p, const IndexWord& J, const Scalar& weight, int n,
                  const std::function<Scalar(const IndexWord&)>& coef) {
  const int m = static_cast<int>(J.size());
  const std::size_t dim = tensor_dim(n, m);
  for (std::size_t k = 0; k < dim; ++k) {
    const IndexWord K = index_word(k, n, m);
    const Scalar a = coef(K);
    if (a.is_zero()) continue;
    Word w(static_cast<std::size_t>(m), 0);
    for (int q = 0; q < m; ++q) w[q] = gen_letter(J[q], K[q], n);
    p.add_term(w, weight * a);
  }
}

}  // namespace

NCPoly quantum_determinant(const WgfData& wgf) {
  NCPoly D;
  add_row_word(D, wgf.volume, Scalar(1L), wgf.n, [&](const IndexWord& K) { return wgf.alpha_of(K); });
  return D;
}

NCPoly quantum_determinant(const WgfData& wgf, const std::vector<Scalar>& representative) {
  const int n = wgf.n;
  if (representative.size() != tensor_dim(n, wgf.top)) throw DomainError("representative has the wrong degree");
  NCPoly D;
  Scalar s;
  for (std::size_t j = 0; j < representative.size(); ++j) {
    if (representative[j].is_zero()) continue;
    const IndexWord J = index_word(j, n, wgf.top);
    s += representative[j] * wgf.alpha_of(J);
    add_row_word(D, J, representative[j], n, [&](const IndexWord& K) { return wgf.alpha_of(K); });
  }
  if (s.is_zero()) throw DomainError("representative has zero class in the top degree");
  return D * s.inverse();
}

PolyMatrix cofactor_matrix(const WgfData& wgf) {
  const int n = wgf.n;
  const int m = wgf.top - 1;
  PolyMatrix T(static_cast<std::size_t>(n), std::vector<NCPoly>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    const auto& omega = wgf.left_duals[j];
    for (std::size_t J = 0; J < omega.size(); ++J) {
      if (omega[J].is_zero()) continue;
      const IndexWord Jw = index_word(J, n, m);
      for (int k = 0; k < n; ++k) {
        // coefficient of omega^k in the class of x_K is alpha(x_k x_K)
        add_row_word(T[k][j], Jw, omega[J], n, [&](const IndexWord& K) {
          IndexWord kK{k};
          kK.insert(kK.end(), K.begin(), K.end());
          return wgf.alpha_of(kK);
        });
      }
    }
  }
  return T;
}

PolyMatrix apply_to_matrix(const std::vector<NCPoly>& images, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& row : out) {
    for (auto& p : row) p = p.substitute(images);
  }
  return out;
}

namespace {

Residuals residuals(int n, const std::function<NCPoly(int, int)>& entry, const NCPoly& D, const TruncatedGB& G) {
  Residuals r;
  r.entries.assign(static_cast<std::size_t>(n), std::vector<NCPoly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      NCPoly e = entry(i, j);
      if (i == j) e -= D;
      const NormalForm nf = G.normal_form(e);
      r.entries[i][j] = nf.remainder;
      if (!nf.remainder.is_zero()) r.zero = false;
      if (!nf.decisive) r.decisive = false;
    }
  }
  return r;
}

}  // namespace

Residuals verify_propfila(int n, const PolyMatrix& T, const NCPoly& D, const TruncatedGB& G) {
  return residuals(
      n,
      [&](int i, int j) {
        NCPoly s;
        for (int k = 0; k < n; ++k) s += NCPoly::gen(i, k, n) * T[k][j];
        return s;
      },
      D, G);
}

Residuals verify_main_hypothesis(int n, const PolyMatrix& JT, const NCPoly& D, const TruncatedGB& G) {
  return residuals(
      n,
      [&](int i, int j) {
        NCPoly s;
        for (int k = 0; k < n; ++k) s += JT[i][k] * NCPoly::gen(k, j, n);
        return s;
      },
      D, G);
}

Normality centrality_normality(int n, const NCPoly& D, const HayashiJ& J, const TruncatedGB* certify) {
  Normality out;
  out.central = J.identity;
  for (int g = 0; g < n * n; ++g) {
    const char letter = static_cast<char>(g);
    const NCPoly t = NCPoly::monomial(Word(1, letter));
    const NCPoly& img = J.images[static_cast<std::size_t>(g)];
    if (img == t) continue;
    CommutationRule rule{letter, img, std::nullopt};
    if (certify) {
      const NormalForm nf = certify->normal_form(D * t - img * D);
      if (nf.decisive) rule.certified = nf.remainder.is_zero();
    }
    out.rules.push_back(std::move(rule));
  }
  return out;
}

std::vector<ZeroDivisor> zero_divisors(int n, const NCPoly& D, const TruncatedGB& G) {
  std::vector<ZeroDivisor> out;
  for (int g = 0; g < n * n; ++g) {
    const NCPoly t = NCPoly::monomial(Word(1, static_cast<char>(g)));
    const NormalForm l = G.normal_form(t * D);
    const NormalForm r = G.normal_form(D * t);
    ZeroDivisor z{static_cast<char>(g), l.decisive && l.remainder.is_zero(), r.decisive && r.remainder.is_zero()};
    if (z.left || z.right) out.push_back(z);
  }
  return out;
}

std::vector<AntipodeEntry> antipode_table(int n, const PolyMatrix& T, bool hypothesis_holds) {
  if (!hypothesis_holds) throw DomainError("antipode refused: the main hypothesis does not hold");
  std::vector<AntipodeEntry> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back({gen_letter(i, j, n), T[i][j]});
  }
  return out;
}

std::vector<DiagonalCertificate> diagonal_certificates(const std::vector<std::vector<Scalar>>& q,
                                                       const TruncatedGB& G) {
  const int n = static_cast<int>(q.size());
  std::vector<DiagonalCertificate> out;
  auto in_ideal = [&](const NCPoly& p) {
    const NormalForm nf = G.normal_form(p);
    return nf.decisive && nf.remainder.is_zero();
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      DiagonalCertificate c;
      const char g = gen_letter(i, j, n);
      c.element = NCPoly::monomial(Word{g, g});
      c.statement = "(" + gen_name(g, n) + ")^2 = 0";
      c.applies = !(q[j][j].inverse().pow(2) * q[i][i].pow(2)).is_one();
      c.holds = in_ideal(c.element);
      out.push_back(std::move(c));
    }
  }
  for (int k = 0; k < n; ++k) {
    const bool applies = q[k][k].multiplicative_order() != 2;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        DiagonalCertificate c;
        const char a = gen_letter(i, k, n);
        const char b = gen_letter(j, k, n);
        c.element = NCPoly::monomial(Word{a, b});
        c.statement = gen_name(a, n) + " " + gen_name(b, n) + " = 0";
        c.applies = applies;
        c.holds = in_ideal(c.element);
        out.push_back(c);
        const char u = gen_letter(k, i, n);
        const char v = gen_letter(k, j, n);
        c.element = NCPoly::monomial(Word{u, v});
        c.statement = gen_name(u, n) + " " + gen_name(v, n) + " = 0";
        c.holds = in_ideal(c.element);
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

LocalizationNote describe_localization(int n, const FrtPresentation& frt, const NCPoly& D,
                                       const std::vector<ZeroDivisor>& zd) {
  LocalizationNote note;
  if (zd.empty()) return note;
  std::vector<NCPoly> images(static_cast<std::size_t>(n) * n);
  std::set<char> killed;
  for (int g = 0; g < n * n; ++g) images[g] = NCPoly::monomial(Word(1, static_cast<char>(g)));
  for (const auto& z : zd) {
    images[static_cast<unsigned char>(z.generator)] = NCPoly();
    killed.insert(z.generator);
  }
  std::string names;
  for (char g : killed) names += (names.empty() ? "" : ", ") + gen_name(g, n);
  note.text = names + (killed.size() == 1 ? " maps" : " map") + " to 0 in the localization (g D = 0 or D g = 0 with D invertible)";

  std::vector<NCPoly> rels;
  for (const auto& r : frt.relations) {
    NCPoly s = r.substitute(images);
    if (!s.is_zero()) rels.push_back(std::move(s));
  }
  rels = interreduce(std::move(rels));
  std::vector<char> survivors;
  for (int g = 0; g < n * n; ++g) {
    if (!killed.count(static_cast<char>(g))) survivors.push_back(static_cast<char>(g));
  }
  const bool diagonal_only = std::all_of(survivors.begin(), survivors.end(),
                                         [&](char g) { return gen_row(g, n) == gen_col(g, n); });
  const std::size_t m = survivors.size();
  bool commutators = rels.size() == m * (m - 1) / 2;
  for (const auto& r : rels) {
    if (r.size() != 2) {
      commutators = false;
      break;
    }
    const auto& [w1, c1] = *r.terms().begin();
    const auto& [w2, c2] = *r.terms().rbegin();
    if (w1.size() != 2 || w2 != Word{w1[1], w1[0]} || !(c1 + c2).is_zero()) commutators = false;
  }
  const TruncatedGB G = complete(rels, static_cast<int>(std::max(D.degree(), 2)));
  const NCPoly Dr = G.normal_form(D.substitute(images)).remainder;
  bool monomial = Dr.size() == 1;
  if (monomial) {
    const Word& w = Dr.terms().begin()->first;
    for (char g : survivors) {
      if (w.find(g) == Word::npos) monomial = false;
    }
  }
  if (diagonal_only && commutators && monomial) {
    note.group_algebra = true;
    note.rank = static_cast<int>(m);
    std::string rest;
    for (char g : survivors) rest += (rest.empty() ? "" : ", ") + gen_name(g, n);
    note.text += "; the remaining generators " + rest + " commute and D = " + Dr.to_string(n) +
                 " makes each invertible, so H(c) is the group algebra of Z^" + std::to_string(m);
  }
  return note;
}

Presentation hopf_presentation(int n, const FrtPresentation& frt, const std::optional<HayashiJ>& J) {
  Presentation p;
  for (int g = 0; g < n * n; ++g) p.generators.push_back(gen_name(static_cast<char>(g), n));
  p.generators.push_back("D^-1");
  for (const auto& r : frt.relations) p.relations.push_back(r.to_string(n) + " = 0");
  p.relations.push_back("D D^-1 = 1");
  p.relations.push_back("D^-1 D = 1");
  if (J) {
    for (int g = 0; g < n * n; ++g) {
      const std::string t = gen_name(static_cast<char>(g), n);
      const NCPoly& img = J->images[static_cast<std::size_t>(g)];
      const std::string rhs = img.size() == 1 ? img.to_string(n) : "(" + img.to_string(n) + ")";
      p.relations.push_back(t + " D^-1 = D^-1 " + rhs);
    }
  }
  return p;
}

std::optional<Presentation> sl_presentation(int n, const FrtPresentation& frt, const NCPoly& D, bool central) {
  if (!central) return std::nullopt;
  Presentation p;
  for (int g = 0; g < n * n; ++g) p.generators.push_back(gen_name(static_cast<char>(g), n));
  for (const auto& r : frt.relations) p.relations.push_back(r.to_string(n) + " = 0");
  p.relations.push_back(D.to_string(n) + " = 1");
  return p;
}

bool relations_are_subcomodule(const GradedNichols& b, const std::vector<std::pair<int, std::vector<Scalar>>>& rels,
                               const TruncatedGB& G, std::string* witness) {
  const int n = b.n();
  for (const auto& [d, w] : rels) {
    if (d > b.computed_through()) continue;
    const QuotientMap& q = b.degree(d).quotient;
    const std::size_t dim = tensor_dim(n, d);
    std::vector<NCPoly> comps(q.dim());
    for (const auto& [key, coef] : coaction_expand(w, n, d)) {
      std::vector<Scalar> e(dim);
      e[key.second] = Scalar(1L);
      const auto coords = q.coords(e);
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) comps[k].add_term(key.first, coef * coords[k]);
      }
    }
    for (const auto& p : comps) {
      const NormalForm nf = G.normal_form(p);
      if (!nf.decisive || !nf.remainder.is_zero()) {
        if (witness) {
          *witness = "coaction of " + tensor_to_string(w, n, d, true) + " leaves the relation space: " +
                     nf.remainder.to_string(n) + " is not in the FRT ideal";
        }
        return false;
      }
    }
  }
  return true;
}

QDetReport run_qdet(const BraidingTensor& c, const QDetOptions& opt,
                    const std::optional<std::vector<std::vector<Scalar>>>& diagonal_q) {
  QDetReport rep;
  const int n = c.n();
  rep.n = n;
  rep.frt = frt_relations(c);
  rep.custom_algebra = !opt.algebra_relations.empty();
  const GradedNichols b = rep.custom_algebra
                              ? GradedNichols::from_relations(n, opt.algebra_relations, opt.max_degree, opt.max_dim)
                              : GradedNichols(c, opt.max_degree, opt.max_dim);
  rep.hilbert = b.hilbert();
  if (rep.custom_algebra) {
    int deg = 2;
    for (const auto& r : opt.algebra_relations) deg = std::max(deg, r.first);
    const TruncatedGB G = complete(rep.frt.relations, deg, opt.budget);
    rep.algebra_subcomodule = relations_are_subcomodule(b, opt.algebra_relations, G, &rep.subcomodule_witness);
  }
  rep.top = detect_top(b, opt.volume);
  if (rep.top.status != TopResult::Status::Found) return rep;
  const WgfData& wgf = *rep.top.wgf;

  rep.gb_degree = wgf.top + 1;
  const TruncatedGB G = complete(rep.frt.relations, rep.gb_degree, opt.budget);
  rep.gb_budget_exhausted = G.budget_exhausted();
  rep.gb_work = G.work();

  rep.D = quantum_determinant(wgf);
  rep.counit_D = counit(rep.D, n);
  rep.T = cofactor_matrix(wgf);
  rep.propfila = verify_propfila(n, rep.T, rep.D, G);

  const RForm r(c);
  try {
    rep.J = hayashi_J(r, rep.D);
  } catch (const DomainError& e) {
    rep.J_error = e.what();
  }
  if (rep.J) {
    rep.JT = apply_to_matrix(rep.J->images, rep.T);
    rep.main = verify_main_hypothesis(n, rep.JT, rep.D, G);
    rep.hypothesis_holds = rep.main.zero && rep.main.decisive;
    rep.normality = centrality_normality(n, rep.D, *rep.J, opt.certify_normality ? &G : nullptr);
  } else {
    rep.main.zero = false;
    rep.main.decisive = false;
  }
  rep.zero_divisors = zero_divisors(n, rep.D, G);
  if (rep.hypothesis_holds) rep.antipode = antipode_table(n, rep.T, true);
  rep.hopf = hopf_presentation(n, rep.frt, rep.J);
  rep.sl = sl_presentation(n, rep.frt, rep.D, rep.J && rep.normality.central);
  rep.localization = describe_localization(n, rep.frt, rep.D, rep.zero_divisors);
  if (diagonal_q) rep.diagonal = diagonal_certificates(*diagonal_q, G);
  return rep;
}

}  // namespace qfa
