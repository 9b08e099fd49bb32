#pragma once

// Noncommutative polynomials in the comatrix generators t_i^j.
//
// A word is a std::string whose characters are generator indices; t_i^j
// (0-based i, j) is the character i*n + j. Words are compared deglex:
// shorter first, then lexicographically by generator index.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qfa/scalar.hpp"

namespace qfa {

using Word = std::string;

inline char gen_letter(int i, int j, int n) { return static_cast<char>(i * n + j); }
inline int gen_row(char g, int n) { return static_cast<unsigned char>(g) / n; }
inline int gen_col(char g, int n) { return static_cast<unsigned char>(g) % n; }

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

int order_compare(const Word& a, const Word& b);

class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, DeglexLess>;

  NCPoly() = default;
  NCPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static NCPoly monomial(const Word& w, const Scalar& c = Scalar(1L));
  static NCPoly gen(int i, int j, int n) { return monomial(Word(1, gen_letter(i, j, n))); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);

  /// Largest word in the order; requires nonzero.
  const Word& lead_word() const { return terms_.rbegin()->first; }
  const Scalar& lead_coeff() const { return terms_.rbegin()->second; }

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& s);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const Scalar& s) { return a *= s; }
  friend NCPoly operator*(const Scalar& s, NCPoly a) { return a *= s; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Substitutes every letter g by images[g] (an algebra map on the free algebra).
  NCPoly substitute(const std::vector<NCPoly>& images) const;

  /// Human-readable form using letters a, b, ... for n <= 5 and t[i,j] otherwise.
  std::string to_string(int n) const;
  std::string to_latex(int n) const;

 private:
  Terms terms_;
};

/// Pretty name of the generator t_{i+1}^{j+1}.
std::string gen_name(char g, int n);
std::string word_to_string(const Word& w, int n);
std::string word_to_latex(const Word& w, int n);

/// Parses polynomials written in the pretty-printer syntax, e.g.
/// "ae^2 - af^2 + 2*bdf - (z4)*bc" or "t[1,1]t[2,2] - t[1,2]t[2,1]".
/// Coefficients: an optional rational or a parenthesized scalar literal,
/// optionally followed by '*'.
NCPoly parse_ncpoly(std::string_view text, int n);

class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Scalar>;

  const Terms& terms() const { return terms_; }
  void add_term(const Word& a, const Word& b, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Comatrix coproduct, extended multiplicatively.
TensorPoly coproduct(const NCPoly& p, int n);
Scalar counit(const NCPoly& p, int n);
Scalar counit_word(const Word& w, int n);

/// (Delta (x) id) and (id (x) Delta) as maps into triple tensors, keyed by three words.
std::map<std::tuple<Word, Word, Word>, Scalar> coproduct_left_then(const NCPoly& p, int n);
std::map<std::tuple<Word, Word, Word>, Scalar> coproduct_right_then(const NCPoly& p, int n);

}  // namespace qfa
