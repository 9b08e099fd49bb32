#include "qfa/closed_forms.hpp"

namespace qfa {

std::map<IndexWord, Scalar> alpha_coefficients(const WgfData& wgf) {
  std::map<IndexWord, Scalar> out;
  for (std::size_t k = 0; k < wgf.alpha.size(); ++k) {
    if (!wgf.alpha[k].is_zero()) out.emplace(index_word(k, wgf.n, wgf.top), wgf.alpha[k]);
  }
  return out;
}

namespace {

// The word g_{a_0}(j_1) ... g_{a_{N-1}}(j_N) and the end point a_N.
std::pair<IndexWord, int> orbit(const SetSolution& sol, const IndexWord& J, int a) {
  IndexWord w;
  int cur = a;
  for (int j : J) {
    w.push_back(sol.g(cur, j));
    cur = sol.f(j, cur);
  }
  return {w, cur};
}

int f_inverse(const SetSolution& sol, int j, int y) {
  for (int x = 0; x < sol.n; ++x) {
    if (sol.f(j, x) == y) return x;
  }
  throw DomainError("closed form: f_" + std::to_string(j + 1) + " is not bijective");
}

}  // namespace

Matrix closed_form_rD(const SetSolution& sol, const Cocycle& q, const WgfData& wgf) {
  const int n = sol.n;
  Matrix r(n, n);
  for (int a = 0; a < n; ++a) {
    const auto [w, end] = orbit(sol, wgf.volume, a);
    Scalar val = wgf.alpha_of(w);
    int cur = a;
    for (int j : wgf.volume) {
      val *= q(cur, j);
      cur = sol.f(j, cur);
    }
    r(a, end) = val;
  }
  return r;
}

std::vector<std::optional<NCPoly>> closed_form_J(const SetSolution& sol, const Cocycle& q, const WgfData& wgf) {
  if (!q.is_constant()) throw DomainError("closed form for J needs a constant cocycle");
  const int n = sol.n;
  std::vector<std::optional<NCPoly>> out(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const auto [wa, aN] = orbit(sol, wgf.volume, a);
    const Scalar alpha_a = wgf.alpha_of(wa);
    if (alpha_a.is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      int b0 = b;
      for (auto it = wgf.volume.rbegin(); it != wgf.volume.rend(); ++it) b0 = f_inverse(sol, *it, b0);
      const auto [wb, bN] = orbit(sol, wgf.volume, b0);
      (void)bN;
      out[gen_letter(aN, b, n)] = NCPoly::gen(a, b0, n) * (wgf.alpha_of(wb) / alpha_a);
    }
  }
  return out;
}

}  // namespace qfa
