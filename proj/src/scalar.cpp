#include "qfa/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qfa {

namespace {

std::mutex g_cyclo_mutex;

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t e = num.size(); e-- > dn;) {
    const long q = num[e];
    quot[e - dn] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[e - dn + i] -= q * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw DomainError("cyclotomic polynomial division not exact");
  }
  return quot;
}

void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Reduces p modulo the monic integer polynomial phi, result has exactly deg(phi) entries.
std::vector<Rational> reduce_mod(std::vector<Rational> p, const std::vector<long>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t e = p.size(); e-- > d;) {
    if (p[e] == 0) continue;
    const Rational q = p[e];
    for (std::size_t i = 0; i <= d; ++i) {
      if (phi[i] != 0) p[e - d + i] -= q * phi[i];
    }
  }
  p.resize(d, Rational(0));
  return p;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Polynomial division over Q: returns quotient, leaves remainder in num.
std::vector<Rational> poly_divmod(std::vector<Rational>& num, const std::vector<Rational>& den) {
  trim(num);
  if (num.size() < den.size()) return {};
  std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
  const Rational& lead = den.back();
  for (std::size_t e = num.size(); e-- >= den.size();) {
    if (num[e] == 0) continue;
    const Rational q = num[e] / lead;
    quot[e - den.size() + 1] = q;
    for (std::size_t i = 0; i < den.size(); ++i) num[e - den.size() + 1 + i] -= q * den[i];
  }
  trim(num);
  return quot;
}

std::vector<Rational> poly_sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw DomainError("euler_phi: m must be positive");
  int result = m;
  int x = m;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic_polynomial: m must be positive");
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  return cache.emplace(m, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic() : m_(1), c_(1, Rational(0)) {}
Cyclotomic::Cyclotomic(long value) : m_(1), c_(1, Rational(value)) {}
Cyclotomic::Cyclotomic(const Rational& value) : m_(1), c_(1, value) { c_[0].canonicalize(); }
Cyclotomic::Cyclotomic(int m, std::vector<Rational> coeffs) : m_(m), c_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_powers(int m, const std::vector<Rational>& coeffs) {
  if (m < 1) throw DomainError("conductor must be positive");
  const auto& phi = cyclotomic_polynomial(m);
  // Fold exponents mod m first so long inputs stay cheap.
  std::vector<Rational> folded(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % static_cast<std::size_t>(m)] += coeffs[k];
  return Cyclotomic(m, reduce_mod(std::move(folded), phi));
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
  if (m < 1) throw DomainError("root_of_unity: m must be positive");
  long e = k % m;
  if (e < 0) e += m;
  std::vector<Rational> p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[static_cast<std::size_t>(e)] = 1;
  return from_powers(m, p);
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_) {
    if (q != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == 1; }

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("scalar is not rational: " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::embed(int target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) throw DomainError("embed: target conductor must be a multiple");
  const int step = target / m_;
  std::vector<Rational> p(static_cast<std::size_t>(target), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    p[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(target)] += c_[k];
  }
  return Cyclotomic(target, reduce_mod(std::move(p), cyclotomic_polynomial(target)));
}

void Cyclotomic::unify_with(Cyclotomic& other) {
  if (m_ == other.m_) return;
  const int l = std::lcm(m_, other.m_);
  if (m_ != l) *this = embed(l);
  if (other.m_ != l) other = other.embed(l);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else if (o.m_ == 1) {
    c_[0] += o.c_[0];
  } else {
    Cyclotomic b = o;
    unify_with(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.m_ == m_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  } else if (o.m_ == 1) {
    c_[0] -= o.c_[0];
  } else {
    Cyclotomic b = o;
    unify_with(b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ == 1) {
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  if (m_ == 1) {
    const Rational s = c_[0];
    *this = o;
    for (auto& q : c_) q *= s;
    return *this;
  }
  Cyclotomic b = o;
  unify_with(b);
  c_ = reduce_mod(poly_mul(c_, b.c_), cyclotomic_polynomial(m_));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (m_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const auto& phi_int = cyclotomic_polynomial(m_);
  std::vector<Rational> r0(phi_int.begin(), phi_int.end());
  std::vector<Rational> r1 = c_;
  trim(r1);
  std::vector<Rational> s0;
  std::vector<Rational> s1{Rational(1)};
  while (!r1.empty()) {
    std::vector<Rational> rem = r0;
    const std::vector<Rational> q = poly_divmod(rem, r1);
    std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_m is irreducible.
  const Rational g = r0.at(0);
  for (auto& q : s0) q /= g;
  if (s0.empty()) s0.push_back(Rational(0));
  return Cyclotomic(m_, reduce_mod(std::move(s0), phi_int));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  if (o.m_ == 1) {
    if (o.c_[0] == 0) throw DomainError("division by zero");
    for (auto& q : c_) q /= o.c_[0];
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  Cyclotomic x = a;
  Cyclotomic y = b;
  x.unify_with(y);
  return x.c_ == y.c_;
}

Cyclotomic Cyclotomic::pow(long e) const {
  Cyclotomic base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Cyclotomic result(1L);
  while (k != 0) {
    if (k & 1UL) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

int Cyclotomic::multiplicative_order() const {
  if (is_zero()) return 0;
  const int bound = 2 * std::lcm(m_, 2);
  Cyclotomic p = *this;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= *this;
  }
  return 0;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

}  // namespace

std::string Cyclotomic::to_string() const {
  if (is_rational()) return rational_to_string(c_[0]);
  std::vector<std::string> terms;
  const std::string z = "z" + std::to_string(m_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    if (k == 0) {
      terms.push_back(rational_to_string(q));
      continue;
    }
    std::string power = z + (k == 1 ? "" : "^" + std::to_string(k));
    if (q == 1) {
      terms.push_back(power);
    } else if (q == -1) {
      terms.push_back("-" + power);
    } else {
      terms.push_back(rational_to_string(q) + "*" + power);
    }
  }
  return join_terms(terms);
}

std::string Cyclotomic::to_latex() const {
  auto frac = [](const Rational& q) {
    const bool neg = q < 0;
    const Rational a = neg ? Rational(-q) : q;
    std::string s = a.get_den() == 1 ? a.get_num().get_str()
                                     : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    return (neg ? "-" : "") + s;
  };
  std::vector<std::string> terms;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    if (k == 0) {
      terms.push_back(frac(q));
      continue;
    }
    std::string power = "\\zeta_{" + std::to_string(m_) + "}" + (k == 1 ? "" : "^{" + std::to_string(k) + "}");
    if (q == 1) {
      terms.push_back(power);
    } else if (q == -1) {
      terms.push_back("-" + power);
    } else {
      terms.push_back(frac(q) + power);
    }
  }
  return join_terms(terms);
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view s) : s_(s) {}

  Cyclotomic parse() {
    skip_ws();
    if (at_end()) fail("empty scalar literal");
    Cyclotomic sum;
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
      Cyclotomic term = parse_term();
      sum += sign < 0 ? -term : term;
      first = false;
    }
    return sum;
  }

 private:
  Cyclotomic parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      have_coeff = true;
      skip_ws();
      if (at_end() || peek() != '*') return Cyclotomic(coeff);
      ++pos_;
      skip_ws();
    }
    if (at_end() || peek() != 'z') fail(have_coeff ? "expected 'z' after '*'" : "expected a rational or 'z'");
    ++pos_;
    const long m = parse_uint();
    if (m < 1) fail("conductor must be positive");
    long k = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (!at_end() && peek() == '-') {
        neg = true;
        ++pos_;
      }
      k = parse_uint();
      if (neg) k = -k;
    }
    return Cyclotomic(coeff) * Cyclotomic::root_of_unity(static_cast<int>(m), k);
  }

  Rational parse_rational() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string text(s_.substr(start, pos_ - start));
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
      text += "/" + std::string(s_.substr(dstart, pos_ - dstart));
    }
    Rational q;
    if (q.set_str(text, 10) != 0) fail("bad rational '" + text + "'");
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  long parse_uint() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar literal '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) { return LiteralParser(text).parse(); }

int Cyclotomic::literal_conductor(std::string_view text) { return parse(text).conductor(); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.to_string(); }

}  // namespace qfa
