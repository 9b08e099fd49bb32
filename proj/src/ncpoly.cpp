#include "qfa/ncpoly.hpp"

#include <cctype>

namespace qfa {

int order_compare(const Word& a, const Word& b) {
  DeglexLess less;
  if (less(a, b)) return -1;
  if (less(b, a)) return 1;
  return 0;
}

NCPoly::NCPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NCPoly NCPoly::monomial(const Word& w, const Scalar& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int NCPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.size());
}

bool NCPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  for (const auto& [u, x] : a.terms_) {
    for (const auto& [v, y] : b.terms_) r.add_term(u + v, x * y);
  }
  return r;
}

NCPoly NCPoly::substitute(const std::vector<NCPoly>& images) const {
  NCPoly r;
  for (const auto& [w, c] : terms_) {
    NCPoly prod(c);
    for (char g : w) prod = prod * images.at(static_cast<unsigned char>(g));
    r += prod;
  }
  return r;
}

std::string gen_name(char g, int n) {
  const int idx = static_cast<unsigned char>(g);
  if (n <= 5) return std::string(1, static_cast<char>('a' + idx));
  return "t[" + std::to_string(idx / n + 1) + "," + std::to_string(idx % n + 1) + "]";
}

namespace {

std::string word_render(const Word& w, int n, bool latex) {
  std::string out;
  for (std::size_t p = 0; p < w.size();) {
    std::size_t q = p;
    while (q < w.size() && w[q] == w[p]) ++q;
    const std::size_t run = q - p;
    out += gen_name(w[p], n);
    if (run > 1) out += latex ? "^{" + std::to_string(run) + "}" : "^" + std::to_string(run);
    p = q;
  }
  return out;
}

std::string render_terms(const NCPoly& p, int n, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Word& w = it->first;
    const Scalar& c = it->second;
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.rational_value();
      negative = q < 0;
      if (negative) q = -q;
      if (w.empty()) {
        coeff = latex ? Scalar(q).to_latex() : rational_to_string(q);
      } else if (q != 1) {
        if (latex) {
          coeff = Scalar(q).to_latex();
        } else {
          coeff = rational_to_string(q);
          if (q.get_den() != 1) coeff += "*";
        }
      }
    } else {
      coeff = latex ? "\\left(" + c.to_latex() + "\\right)" : "(" + c.to_string() + ")" + (w.empty() ? "" : "*");
    }
    const std::string term = coeff + (latex ? word_to_latex(w, n) : word_to_string(w, n));
    if (first) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string word_to_string(const Word& w, int n) { return word_render(w, n, false); }

std::string word_to_latex(const Word& w, int n) {
  if (n <= 5) return word_render(w, n, true);
  std::string out;
  for (std::size_t p = 0; p < w.size();) {
    std::size_t q = p;
    while (q < w.size() && w[q] == w[p]) ++q;
    const int idx = static_cast<unsigned char>(w[p]);
    const std::string g = "t_{" + std::to_string(idx / n + 1) + "}^{" + std::to_string(idx % n + 1) + "}";
    out += q - p > 1 ? "(" + g + ")^{" + std::to_string(q - p) + "}" : g;
    p = q;
  }
  return out;
}

std::string NCPoly::to_string(int n) const { return render_terms(*this, n, false); }
std::string NCPoly::to_latex(int n) const { return render_terms(*this, n, true); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int n) : s_(s), n_(n) {}

  NCPoly parse() {
    NCPoly result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Scalar coeff(1L);
      bool have_coeff = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_rational();
        have_coeff = true;
      } else if (!at_end() && peek() == '(') {
        const std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) fail("unbalanced parenthesis");
        coeff = Scalar::parse(s_.substr(pos_ + 1, close - pos_ - 1));
        pos_ = close + 1;
        have_coeff = true;
      }
      skip_ws();
      if (have_coeff && !at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
      Word w = parse_word();
      if (w.empty() && !have_coeff) fail("expected a term");
      result.add_term(w, sign < 0 ? -coeff : coeff);
      first = false;
    }
    return result;
  }

 private:
  Word parse_word() {
    Word w;
    while (!at_end()) {
      char g;
      const char ch = peek();
      if (ch == 't' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '[') {
        pos_ += 2;
        const long i = parse_uint();
        expect(',');
        const long j = parse_uint();
        expect(']');
        if (i < 1 || j < 1 || i > n_ || j > n_) fail("generator index out of range");
        g = gen_letter(static_cast<int>(i - 1), static_cast<int>(j - 1), n_);
      } else if (n_ <= 5 && ch >= 'a' && ch < 'a' + n_ * n_) {
        g = static_cast<char>(ch - 'a');
        ++pos_;
      } else {
        break;
      }
      long rep = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        rep = parse_uint();
      }
      w.append(static_cast<std::size_t>(rep), g);
      skip_ws_inside_word();
    }
    return w;
  }

  void skip_ws_inside_word() {
    std::size_t p = pos_;
    while (p < s_.size() && s_[p] == ' ') ++p;
    if (p < s_.size() && ((s_[p] >= 'a' && s_[p] <= 'y') || s_[p] == 't')) pos_ = p;
  }

  Scalar parse_rational() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return Scalar::parse(s_.substr(start, pos_ - start));
  }

  long parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text, int n) { return PolyParser(text, n).parse(); }

void TensorPoly::add_term(const Word& a, const Word& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

// Calls emit(left, right) for every term of the coproduct of the word w.
template <class F>
void coproduct_word(const Word& w, int n, F&& emit) {
  const std::size_t m = w.size();
  std::vector<int> k(m, 0);
  Word left(m, 0), right(m, 0);
  while (true) {
    for (std::size_t p = 0; p < m; ++p) {
      left[p] = gen_letter(gen_row(w[p], n), k[p], n);
      right[p] = gen_letter(k[p], gen_col(w[p], n), n);
    }
    emit(left, right);
    std::size_t p = m;
    while (p > 0 && ++k[p - 1] == n) k[--p] = 0;
    if (p == 0) break;
  }
}

}  // namespace

TensorPoly coproduct(const NCPoly& p, int n) {
  TensorPoly t;
  for (const auto& [w, c] : p.terms()) {
    coproduct_word(w, n, [&](const Word& a, const Word& b) { t.add_term(a, b, c); });
  }
  return t;
}

Scalar counit_word(const Word& w, int n) {
  for (char g : w) {
    if (gen_row(g, n) != gen_col(g, n)) return Scalar();
  }
  return Scalar(1L);
}

Scalar counit(const NCPoly& p, int n) {
  Scalar s;
  for (const auto& [w, c] : p.terms()) {
    if (!counit_word(w, n).is_zero()) s += c;
  }
  return s;
}

namespace {

using Triple = std::map<std::tuple<Word, Word, Word>, Scalar>;

void add_triple(Triple& t, const Word& a, const Word& b, const Word& c, const Scalar& x) {
  auto [it, inserted] = t.emplace(std::make_tuple(a, b, c), x);
  if (inserted) return;
  it->second += x;
  if (it->second.is_zero()) t.erase(it);
}

}  // namespace

Triple coproduct_left_then(const NCPoly& p, int n) {
  Triple out;
  const TensorPoly once = coproduct(p, n);
  for (const auto& [key, c] : once.terms()) {
    const Scalar coeff = c;
    const Word right = key.second;
    coproduct_word(key.first, n, [&](const Word& a, const Word& b) { add_triple(out, a, b, right, coeff); });
  }
  return out;
}

Triple coproduct_right_then(const NCPoly& p, int n) {
  Triple out;
  const TensorPoly once = coproduct(p, n);
  for (const auto& [key, c] : once.terms()) {
    const Scalar coeff = c;
    const Word left = key.first;
    coproduct_word(key.second, n, [&](const Word& a, const Word& b) { add_triple(out, left, a, b, coeff); });
  }
  return out;
}

}  // namespace qfa
