#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element of Q(zeta_m) is stored as its residue modulo the m-th cyclotomic
// polynomial Phi_m, i.e. as phi(m) rational coefficients on the power basis
// 1, zeta_m, ..., zeta_m^(phi(m)-1). The representation is canonical for a
// fixed conductor, so equality is coefficient equality. Mixed-conductor
// operations embed both operands into Q(zeta_lcm).

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfa {

using Rational = mpq_class;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer coefficients of Phi_m, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int m);

/// Euler's totient.
int euler_phi(int m);

class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_m^k in canonical form.
  static Cyclotomic root_of_unity(int m, long k);

  /// Builds sum coeffs[k] zeta_m^k for arbitrary length, reducing mod Phi_m.
  static Cyclotomic from_powers(int m, const std::vector<Rational>& coeffs);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Throws DomainError if the value is not rational.
  Rational rational_value() const;

  /// Image under Q(zeta_m) -> Q(zeta_target); target must be a multiple of m.
  Cyclotomic embed(int target) const;

  /// Throws DomainError on zero.
  Cyclotomic inverse() const;

  /// Smallest k >= 1 with this^k == 1, or 0 if the element is not a root of unity
  /// of order dividing 2*lcm(conductor, 2).
  int multiplicative_order() const;

  Cyclotomic pow(long e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Literal form, e.g. "1 - 1/2*z3^2". parse(to_string()) == *this.
  std::string to_string() const;
  /// LaTeX form using \zeta_{m}^{k}.
  std::string to_latex() const;

  /// Parses the scalar literal grammar: a sum of terms `q` or `q*z{m}^{k}`.
  /// Also accepts `z{m}`, `-z{m}^{k}` and `q*z{m}` as shorthands.
  static Cyclotomic parse(std::string_view text);

  /// Largest conductor mentioned by a literal (1 if purely rational).
  static int literal_conductor(std::string_view text);

 private:
  Cyclotomic(int m, std::vector<Rational> coeffs);
  void unify_with(Cyclotomic& other);

  int m_;
  std::vector<Rational> c_;
};

using Scalar = Cyclotomic;

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

/// Canonical rational text: "p" or "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace qfa
