#include "qfa/nichols.hpp"

#include <cctype>
#include <map>

namespace qfa {

std::size_t word_index(const IndexWord& w, int n) {
  std::size_t idx = 0;
  for (int a : w) {
    if (a < 0 || a >= n) throw DomainError("index word letter out of range");
    idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
  }
  return idx;
}

IndexWord index_word(std::size_t idx, int n, int d) {
  IndexWord w(static_cast<std::size_t>(d));
  for (int p = d - 1; p >= 0; --p) {
    w[static_cast<std::size_t>(p)] = static_cast<int>(idx % static_cast<std::size_t>(n));
    idx /= static_cast<std::size_t>(n);
  }
  return w;
}

std::string index_word_to_string(const IndexWord& w, int n, bool pretty) {
  if (w.empty()) return "1";
  std::string out;
  if (pretty && n <= 3) {
    for (std::size_t p = 0; p < w.size();) {
      std::size_t q = p;
      while (q < w.size() && w[q] == w[p]) ++q;
      out += static_cast<char>("xyz"[w[p]]);
      if (q - p > 1) out += "^" + std::to_string(q - p);
      p = q;
    }
    return out;
  }
  for (int a : w) out += "x" + std::to_string(a + 1);
  return out;
}

IndexWord parse_index_word(std::string_view text, int n) {
  IndexWord w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("word '" + std::string(text) + "': " + what + " at offset " + std::to_string(pos));
  };
  auto read_uint = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++pos;
      continue;
    }
    int letter = -1;
    if (ch == 'x' && pos + 1 < text.size() &&
        (std::isdigit(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '_')) {
      ++pos;
      if (text[pos] == '_') ++pos;
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        letter = read_uint() - 1;
        if (pos >= text.size() || text[pos] != '}') fail("expected '}'");
        ++pos;
      } else {
        letter = read_uint() - 1;
      }
    } else if (n <= 3 && (ch == 'x' || ch == 'y' || ch == 'z')) {
      letter = ch == 'x' ? 0 : ch == 'y' ? 1 : 2;
      ++pos;
    } else {
      fail("unexpected character");
    }
    if (letter < 0 || letter >= n) fail("letter out of range");
    int rep = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        rep = read_uint();
        if (pos >= text.size() || text[pos] != '}') fail("expected '}'");
        ++pos;
      } else {
        rep = read_uint();
      }
    }
    w.insert(w.end(), static_cast<std::size_t>(rep), letter);
  }
  return w;
}

std::string tensor_to_string(const std::vector<Scalar>& v, int n, int d, bool pretty) {
  std::string out;
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    const Scalar& c = v[idx];
    if (c.is_zero()) continue;
    const std::string w = index_word_to_string(index_word(idx, n, d), n, pretty);
    std::string term;
    bool neg = false;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      neg = q < 0;
      if (neg) q = -q;
      term = (q == 1 ? "" : rational_to_string(q) + "*") + w;
    } else {
      term = "(" + c.to_string() + ")*" + w;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

Matrix qs_next(const BraidingTensor& c, const Matrix& prev, int d) {
  const int n = c.n();
  const std::size_t dim = tensor_dim(n, d);
  Matrix qs(dim, dim);
  for (std::size_t w = 0; w < dim; ++w) {
    // (QS_{d-1} (x) id) e_w.
    const std::size_t head = w / static_cast<std::size_t>(n);
    const std::size_t last = w % static_cast<std::size_t>(n);
    SparseVec v;
    for (std::size_t r = 0; r < prev.rows(); ++r) {
      if (!prev(r, head).is_zero()) v.emplace_back(r * n + last, prev(r, head));
    }
    // sum over k of rho(s_k) ... rho(s_{d-1}) v, the last factor applied first.
    SparseVec acc = v;
    for (const auto& [idx, a] : v) qs(idx, w) += a;
    for (int k = d - 1; k >= 1; --k) {
      acc = apply_generator(c, d, k, acc);
      for (const auto& [idx, a] : acc) qs(idx, w) += a;
    }
  }
  return qs;
}

}  // namespace

Matrix qs_matrix(const BraidingTensor& c, int d) {
  if (d < 0) throw DomainError("qs_matrix: negative degree");
  Matrix m = Matrix::identity(tensor_dim(c.n(), d < 1 ? 0 : 1));
  for (int k = 2; k <= d; ++k) m = qs_next(c, m, k);
  return m;
}

Matrix qs_matrix_bruteforce(const BraidingTensor& c, int d) {
  const std::size_t dim = tensor_dim(c.n(), d);
  Matrix m(dim, dim);
  for (const auto& p : all_permutations(d)) m = m + matsumoto_lift(c, reduced_word(p), d);
  return m;
}

std::vector<Scalar> concat_tensor(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) out[i * v.size() + j] = u[i] * v[j];
    }
  }
  return out;
}

GradedNichols::GradedNichols(const BraidingTensor& c, int max_degree, std::size_t max_dim) : n_(c.n()) {
  Matrix qs;
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t dim = tensor_dim(n_, d);
    if (dim > max_dim) {
      capped_ = true;
      break;
    }
    NicholsDegree nd;
    nd.d = d;
    qs = d <= 1 ? Matrix::identity(dim) : qs_next(c, qs, d);
    nd.qs = qs;
    nd.kernel = kernel(qs);
    nd.rank = dim - nd.kernel.dim();
    nd.quotient = quotient_coords(dim, nd.kernel);
    push_degree(std::move(nd), {});
    if (reached_zero_) break;
  }
}

void GradedNichols::push_degree(NicholsDegree nd, const std::vector<std::vector<Scalar>>& extra) {
  const int d = nd.d;
  const std::size_t dim = tensor_dim(n_, d);
  nd.inherited.ambient_dim = dim;
  if (d >= 2) {
    const Subspace& prev = degrees_.back().kernel;
    std::vector<std::vector<Scalar>> gens;
    for (const auto& k : prev.basis) {
      for (int i = 0; i < n_; ++i) {
        std::vector<Scalar> e(static_cast<std::size_t>(n_));
        e[static_cast<std::size_t>(i)] = Scalar(1L);
        gens.push_back(concat_tensor(e, k));
        gens.push_back(concat_tensor(k, e));
      }
    }
    nd.inherited = span(dim, gens);
    if (!extra.empty()) {
      gens.insert(gens.end(), extra.begin(), extra.end());
      nd.kernel = span(dim, gens);
      nd.rank = dim - nd.kernel.dim();
      nd.quotient = quotient_coords(dim, nd.kernel);
    }
    std::vector<std::vector<Scalar>> rem;
    for (const auto& k : nd.kernel.basis) rem.push_back(nd.inherited.reduce(k));
    nd.new_relations = span(dim, rem).basis;
  }
  degrees_.push_back(std::move(nd));
  if (degrees_.back().rank == 0) reached_zero_ = true;
}

GradedNichols GradedNichols::from_relations(int n, const std::vector<std::pair<int, std::vector<Scalar>>>& relations,
                                            int max_degree, std::size_t max_dim) {
  GradedNichols b(n);
  for (const auto& [deg, v] : relations) {
    if (deg < 1 || v.size() != tensor_dim(n, deg)) throw DomainError("relation tensor has the wrong size");
  }
  for (int d = 0; d <= max_degree; ++d) {
    const std::size_t dim = tensor_dim(n, d);
    if (dim > max_dim) {
      b.capped_ = true;
      break;
    }
    std::vector<std::vector<Scalar>> extra;
    for (const auto& [deg, v] : relations) {
      if (deg == d) extra.push_back(v);
    }
    NicholsDegree nd;
    nd.d = d;
    nd.kernel.ambient_dim = dim;
    nd.rank = dim;
    nd.quotient = quotient_coords(dim, nd.kernel);
    if (d == 1 && !extra.empty()) {
      nd.kernel = span(dim, extra);
      nd.rank = dim - nd.kernel.dim();
      nd.quotient = quotient_coords(dim, nd.kernel);
    }
    if (d >= 2 && extra.empty()) extra.push_back(std::vector<Scalar>(dim));
    b.push_degree(std::move(nd), d >= 2 ? extra : std::vector<std::vector<Scalar>>{});
    if (b.reached_zero_) break;
  }
  return b;
}

std::vector<std::size_t> GradedNichols::hilbert() const {
  std::vector<std::size_t> h;
  for (const auto& d : degrees_) h.push_back(d.rank);
  return h;
}

std::vector<Scalar> GradedNichols::class_of(const std::vector<Scalar>& v, int d) const {
  return degree(d).quotient.coords(v);
}

std::vector<Scalar> GradedNichols::class_of_word(const IndexWord& w) const {
  const int d = static_cast<int>(w.size());
  std::vector<Scalar> e(tensor_dim(n_, d));
  e[word_index(w, n_)] = Scalar(1L);
  return class_of(e, d);
}

std::vector<Scalar> GradedNichols::class_product(const std::vector<Scalar>& u, int a, const std::vector<Scalar>& v,
                                                 int b) const {
  return class_of(concat_tensor(u, v), a + b);
}

std::vector<IndexWord> GradedNichols::basis_words(int d) const {
  std::vector<IndexWord> out;
  for (std::size_t idx : degree(d).quotient.complement) out.push_back(index_word(idx, n_, d));
  return out;
}

namespace {

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string matrix_witness(const Matrix& m) {
  const Subspace k = kernel(m);
  std::string s = "[";
  for (std::size_t j = 0; j < k.ambient_dim; ++j) s += (j ? ", " : "") + k.basis.at(0)[j].to_string();
  return s + "]";
}

}  // namespace

TopResult detect_top(const GradedNichols& b, const std::optional<IndexWord>& volume) {
  TopResult res;
  const auto h = b.hilbert();
  const int n = b.n();
  int top = -1;
  for (std::size_t d = 1; d + 1 < h.size(); ++d) {
    if (h[d] > 0 && h[d + 1] == 0) {
      top = static_cast<int>(d);
      break;
    }
  }
  if (top < 0) {
    res.status = TopResult::Status::Inconclusive;
    res.message = b.hit_size_cap() ? "size cap reached at degree " + std::to_string(b.computed_through() + 1) +
                                         " before the top degree was found"
                                   : "no top degree found through degree " + std::to_string(b.computed_through());
    return res;
  }
  if (h[static_cast<std::size_t>(top)] != 1) {
    res.status = TopResult::Status::WgfFailure;
    res.message = "top degree " + std::to_string(top) + " has dimension " +
                  std::to_string(h[static_cast<std::size_t>(top)]) + ", not 1";
    return res;
  }
  if (h[static_cast<std::size_t>(top - 1)] != static_cast<std::size_t>(n)) {
    res.status = TopResult::Status::WgfFailure;
    res.message = "dim B^" + std::to_string(top - 1) + " = " + std::to_string(h[static_cast<std::size_t>(top - 1)]) +
                  " differs from dim V = " + std::to_string(n);
    return res;
  }
  WgfData w;
  w.n = n;
  w.top = top;
  const std::size_t dim = tensor_dim(n, top);
  if (volume) {
    if (static_cast<int>(volume->size()) != top) {
      throw DomainError("volume word has degree " + std::to_string(volume->size()) + " but the top degree is " +
                        std::to_string(top));
    }
    if (all_zero(b.class_of_word(*volume))) {
      throw DomainError("volume word " + index_word_to_string(*volume, n) + " has zero class");
    }
    w.volume = *volume;
  } else {
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const IndexWord k = index_word(idx, n, top);
      if (!all_zero(b.class_of_word(k))) {
        w.volume = k;
        break;
      }
    }
  }
  const Scalar vol_coord = b.class_of_word(w.volume).at(0);
  w.alpha.resize(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    w.alpha[idx] = b.class_of_word(index_word(idx, n, top)).at(0) / vol_coord;
  }
  w.dual_reps = b.basis_words(top - 1);
  w.left_pairing = Matrix(n, n);
  w.right_pairing = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int bb = 0; bb < n; ++bb) {
      IndexWord xw{i};
      xw.insert(xw.end(), w.dual_reps[bb].begin(), w.dual_reps[bb].end());
      w.left_pairing(i, bb) = w.alpha_of(xw);
      IndexWord wx = w.dual_reps[bb];
      wx.push_back(i);
      w.right_pairing(bb, i) = w.alpha_of(wx);
    }
  }
  Matrix pinv, qinv;
  try {
    pinv = invert(w.left_pairing);
  } catch (const DomainError&) {
    res.status = TopResult::Status::WgfFailure;
    res.message = "left pairing B^1 x B^" + std::to_string(top - 1) + " -> B^" + std::to_string(top) +
                  " is degenerate; kernel " + matrix_witness(w.left_pairing);
    return res;
  }
  try {
    qinv = invert(w.right_pairing);
  } catch (const DomainError&) {
    res.status = TopResult::Status::WgfFailure;
    res.message = "right pairing B^" + std::to_string(top - 1) + " x B^1 -> B^" + std::to_string(top) +
                  " is degenerate; kernel " + matrix_witness(w.right_pairing);
    return res;
  }
  const std::size_t dim1 = tensor_dim(n, top - 1);
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> omega(dim1), right(dim1);
    for (int bb = 0; bb < n; ++bb) {
      const std::size_t idx = word_index(w.dual_reps[bb], n);
      omega[idx] += pinv(bb, j);
      right[idx] += qinv(j, bb);
    }
    w.left_duals.push_back(std::move(omega));
    w.right_duals.push_back(std::move(right));
  }
  res.status = TopResult::Status::Found;
  res.wgf = std::move(w);
  return res;
}

}  // namespace qfa
