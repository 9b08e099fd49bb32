#include "qfa/frt.hpp"

namespace qfa {

NCPoly frt_relation(const BraidingTensor& c, int i, int j, int r, int s) {
  const int n = c.n();
  NCPoly p;
  for (const auto& t : c.image(i, j)) {
    Word w{gen_letter(t.k, r, n), gen_letter(t.l, s, n)};
    p.add_term(w, t.coeff);
  }
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const Scalar& x = c(k, l, r, s);
      if (x.is_zero()) continue;
      Word w{gen_letter(i, k, n), gen_letter(j, l, n)};
      p.add_term(w, -x);
    }
  }
  return p;
}

FrtPresentation frt_relations(const BraidingTensor& c) {
  const int n = c.n();
  std::vector<NCPoly> raw;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          NCPoly p = frt_relation(c, i, j, r, s);
          if (!p.is_zero()) raw.push_back(std::move(p));
        }
      }
    }
  }
  FrtPresentation f;
  f.n = n;
  f.braiding = c;
  f.relations = interreduce(std::move(raw));
  return f;
}

RForm::RForm(const BraidingTensor& c) : n_(c.n()) {
  const int n = n_;
  right_.assign(static_cast<std::size_t>(n) * n, Matrix(n, n));
  left_.assign(static_cast<std::size_t>(n) * n, Matrix(n, n));
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      Matrix& m = right_[gen_letter(j, l, n)];
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) m(i, k) = c(j, i, k, l);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < n; ++a) {
      Matrix& m = left_[gen_letter(i, a, n)];
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) m(x, y) = c(x, i, a, y);
      }
    }
  }
}

Matrix RForm::against_right(const Word& v) const {
  Matrix m = Matrix::identity(n_);
  for (char g : v) m = right_matrix(g) * m;
  return m;
}

Matrix RForm::against_right(const NCPoly& v) const {
  Matrix m(n_, n_);
  for (const auto& [w, c] : v.terms()) {
    const Matrix r = against_right(w);
    for (int i = 0; i < n_; ++i) {
      for (int a = 0; a < n_; ++a) {
        if (!r(i, a).is_zero()) m(i, a) += c * r(i, a);
      }
    }
  }
  return m;
}

Matrix RForm::against_left(const Word& u) const {
  Matrix m = Matrix::identity(n_);
  for (char g : u) m = m * left_matrix(g);
  return m;
}

Matrix RForm::against_left(const NCPoly& u) const {
  Matrix m(n_, n_);
  for (const auto& [w, c] : u.terms()) {
    const Matrix l = against_left(w);
    for (int i = 0; i < n_; ++i) {
      for (int a = 0; a < n_; ++a) {
        if (!l(i, a).is_zero()) m(i, a) += c * l(i, a);
      }
    }
  }
  return m;
}

Scalar RForm::eval(const Word& u, const Word& v) const {
  if (u.empty()) return counit_word(v, n_);
  if (v.empty()) return counit_word(u, n_);
  if (v.size() == 1) return against_left(u)(gen_row(v[0], n_), gen_col(v[0], n_));
  if (u.size() == 1) return against_right(v)(gen_row(u[0], n_), gen_col(u[0], n_));
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // r(u, v' g) = sum r(u_(2), v') r(u_(1), g).
  const Word vp = v.substr(0, v.size() - 1);
  const Word g = v.substr(v.size() - 1);
  const std::size_t m = u.size();
  std::vector<int> k(m, 0);
  Word first(m, 0), second(m, 0);
  Scalar total;
  while (true) {
    for (std::size_t p = 0; p < m; ++p) {
      first[p] = gen_letter(gen_row(u[p], n_), k[p], n_);
      second[p] = gen_letter(k[p], gen_col(u[p], n_), n_);
    }
    const Scalar b = eval(first, g);
    if (!b.is_zero()) {
      const Scalar a = eval(second, vp);
      if (!a.is_zero()) total += a * b;
    }
    std::size_t p = m;
    while (p > 0 && ++k[p - 1] == n_) k[--p] = 0;
    if (p == 0) break;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Scalar RForm::eval(const NCPoly& u, const NCPoly& v) const {
  Scalar s;
  for (const auto& [a, x] : u.terms()) {
    for (const auto& [b, y] : v.terms()) {
      const Scalar e = eval(a, b);
      if (!e.is_zero()) s += x * y * e;
    }
  }
  return s;
}

HayashiJ hayashi_J(const RForm& r, const NCPoly& D) {
  const int n = r.n();
  HayashiJ h;
  h.R = r.against_right(D);
  try {
    h.Rinv = invert(h.R);
  } catch (const DomainError& e) {
    throw DomainError(std::string("r(t, D) is not invertible: ") + e.what());
  }
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  h.on_generators = Matrix(nn, nn);
  h.images.assign(nn, NCPoly());
  h.identity = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      NCPoly img;
      for (int a = 0; a < n; ++a) {
        if (h.R(i, a).is_zero()) continue;
        for (int b = 0; b < n; ++b) {
          if (h.Rinv(b, j).is_zero()) continue;
          const Scalar x = h.R(i, a) * h.Rinv(b, j);
          img.add_term(Word(1, gen_letter(a, b, n)), x);
          h.on_generators(a * n + b, i * n + j) += x;
        }
      }
      if (img != NCPoly::gen(i, j, n)) h.identity = false;
      h.images[gen_letter(i, j, n)] = std::move(img);
    }
  }
  return h;
}

NCPoly apply_on_generators(const std::vector<NCPoly>& images, const NCPoly& p) { return p.substitute(images); }

NCPoly exchange_defect(const RForm& r, int i, int j, int p, int q) {
  const int n = r.n();
  NCPoly d;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const Scalar a = r.eval(Word(1, gen_letter(i, k, n)), Word(1, gen_letter(j, l, n)));
      if (!a.is_zero()) d.add_term(Word{gen_letter(k, p, n), gen_letter(l, q, n)}, a);
      const Scalar b = r.eval(Word(1, gen_letter(k, p, n)), Word(1, gen_letter(l, q, n)));
      if (!b.is_zero()) d.add_term(Word{gen_letter(j, l, n), gen_letter(i, k, n)}, -b);
    }
  }
  return d;
}

}  // namespace qfa
