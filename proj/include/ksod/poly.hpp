// Exact univariate and bivariate polynomials.
//
// Coefficients are either Rational (GMP rationals, always canonical) or
// AlgNum (elements of a simple extension Q[t]/(m), see algebraic.hpp). The
// templates only need +, -, *, / and an is_zero() found by ADL.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ksod/error.hpp"

namespace ksod {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

namespace detail {
// Unqualified call so ADL picks up is_zero for other coefficient types.
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

template <class T>
class BasicUniPoly {
 public:
  BasicUniPoly() = default;
  explicit BasicUniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicUniPoly constant(const T& c) { return BasicUniPoly(std::vector<T>{c}); }

  static BasicUniPoly monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return BasicUniPoly(std::move(v));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  const T& leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  BasicUniPoly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      T c = coeffs_[i] * T(static_cast<long>(i));
      d.push_back(c);
    }
    return BasicUniPoly(std::move(d));
  }

  BasicUniPoly monic() const {
    if (is_zero()) return *this;
    T inv = T(1) / leading();
    std::vector<T> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      T x = c * inv;
      v.push_back(x);
    }
    return BasicUniPoly(std::move(v));
  }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      T next = acc * x + *it;
      acc = next;
    }
    return acc;
  }

  BasicUniPoly operator-() const {
    std::vector<T> v;
    for (const auto& c : coeffs_) {
      T x = -c;
      v.push_back(x);
    }
    return BasicUniPoly(std::move(v));
  }

  friend BasicUniPoly operator+(const BasicUniPoly& a, const BasicUniPoly& b) {
    std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = v[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return BasicUniPoly(std::move(v));
  }

  friend BasicUniPoly operator-(const BasicUniPoly& a, const BasicUniPoly& b) { return a + (-b); }

  friend BasicUniPoly operator*(const BasicUniPoly& a, const BasicUniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        T prod = a.coeffs_[i] * b.coeffs_[j];
        v[i + j] = v[i + j] + prod;
      }
    }
    return BasicUniPoly(std::move(v));
  }

  friend bool operator==(const BasicUniPoly& a, const BasicUniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

// Euclidean division: a = q * b + r with deg r < deg b.
template <class T>
std::pair<BasicUniPoly<T>, BasicUniPoly<T>> divmod(const BasicUniPoly<T>& a, const BasicUniPoly<T>& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<T> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {BasicUniPoly<T>{}, a};
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  const T inv_lead = T(1) / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    T c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (detail::coeff_is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) {
      T prod = c * b.coefficients()[static_cast<std::size_t>(j)];
      rem[static_cast<std::size_t>(k + j)] = rem[static_cast<std::size_t>(k + j)] - prod;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {BasicUniPoly<T>(std::move(quot)), BasicUniPoly<T>(std::move(rem))};
}

// Monic gcd; gcd(0, 0) = 0.
template <class T>
BasicUniPoly<T> gcd(BasicUniPoly<T> a, BasicUniPoly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s) with s * a = g (mod b), g = monic gcd(a, b).
template <class T>
std::pair<BasicUniPoly<T>, BasicUniPoly<T>> half_extended_gcd(BasicUniPoly<T> a, BasicUniPoly<T> b) {
  BasicUniPoly<T> s0 = BasicUniPoly<T>::constant(T(1));
  BasicUniPoly<T> s1;
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    auto s2 = s0 - q * s1;
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (a.is_zero()) return {a, s0};
  T inv = T(1) / a.leading();
  return {a.monic(), s0 * BasicUniPoly<T>::constant(inv)};
}

// p / gcd(p, p'), monic. Its degree is the number of distinct roots of p
// over the algebraic closure.
template <class T>
BasicUniPoly<T> squarefree_part(const BasicUniPoly<T>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of the zero polynomial");
  auto g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

using UniPoly = BasicUniPoly<Rational>;

std::string to_string(const UniPoly& p, const std::string& var = "t");

// Exponent pair (a, b) of the monomial z^a w^b.
using Exponent = std::pair<unsigned, unsigned>;

template <class T>
class BasicBiPoly {
 public:
  using TermMap = std::map<Exponent, T>;

  BasicBiPoly() = default;

  static BasicBiPoly constant(const T& c) {
    BasicBiPoly p;
    p.add_term({0, 0}, c);
    return p;
  }
  static BasicBiPoly monomial(const T& c, unsigned a, unsigned b) {
    BasicBiPoly p;
    p.add_term({a, b}, c);
    return p;
  }
  static BasicBiPoly z() { return monomial(T(1), 1, 0); }
  static BasicBiPoly w() { return monomial(T(1), 0, 1); }

  void add_term(const Exponent& e, const T& c) {
    if (detail::coeff_is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    T sum = it->second + c;
    if (detail::coeff_is_zero(sum)) {
      terms_.erase(it);
    } else {
      it->second = sum;
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  T coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  T constant_term() const { return coeff({0, 0}); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  // Componentwise minimum of the support; (0, 0) for the zero polynomial.
  Exponent min_exponents() const {
    if (terms_.empty()) return {0, 0};
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      m.first = std::min(m.first, e.first);
      m.second = std::min(m.second, e.second);
    }
    return m;
  }

  // Exact division by z^a w^b; the monomial must divide every term.
  BasicBiPoly divide_monomial(const Exponent& m) const {
    BasicBiPoly out;
    for (const auto& [e, c] : terms_) {
      if (e.first < m.first || e.second < m.second) {
        throw Error(ErrorKind::InvalidInput, "monomial does not divide polynomial");
      }
      out.terms_.emplace(Exponent{e.first - m.first, e.second - m.second}, c);
    }
    return out;
  }

  BasicBiPoly derivative_z() const {
    BasicBiPoly out;
    for (const auto& [e, c] : terms_) {
      if (e.first == 0) continue;
      T d = c * T(static_cast<long>(e.first));
      out.add_term({e.first - 1, e.second}, d);
    }
    return out;
  }

  BasicBiPoly derivative_w() const {
    BasicBiPoly out;
    for (const auto& [e, c] : terms_) {
      if (e.second == 0) continue;
      T d = c * T(static_cast<long>(e.second));
      out.add_term({e.first, e.second - 1}, d);
    }
    return out;
  }

  BasicBiPoly operator-() const {
    BasicBiPoly out;
    for (const auto& [e, c] : terms_) {
      T x = -c;
      out.terms_.emplace(e, x);
    }
    return out;
  }

  friend BasicBiPoly operator+(const BasicBiPoly& a, const BasicBiPoly& b) {
    BasicBiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend BasicBiPoly operator-(const BasicBiPoly& a, const BasicBiPoly& b) { return a + (-b); }

  friend BasicBiPoly operator*(const BasicBiPoly& a, const BasicBiPoly& b) {
    BasicBiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        T prod = ca * cb;
        out.add_term({ea.first + eb.first, ea.second + eb.second}, prod);
      }
    }
    return out;
  }

  BasicBiPoly pow(unsigned k) const {
    BasicBiPoly result = constant(T(1));
    BasicBiPoly base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BasicBiPoly& a, const BasicBiPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

using BiPoly = BasicBiPoly<Rational>;

// Canonical rendering accepted back by parse_polynomial: terms in
// descending total degree, then descending z-degree.
std::string to_string(const BiPoly& p);

// Greatest common divisor in Q[z, w], normalized so that the leading
// coefficient (lex order, z before w) is 1. gcd(0, 0) = 0.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// True iff p has no repeated nonconstant factor in Q[z, w]. Over a field of
// characteristic zero this is the same as squarefree over its closure.
bool is_squarefree(const BiPoly& p);

}  // namespace ksod
