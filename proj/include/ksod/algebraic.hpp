// Arithmetic in a simple algebraic extension K = Q[t]/(m(t)).
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ksod/poly.hpp"

namespace ksod {

class NumberField {
 public:
  // The modulus is made monic. The caller certifies irreducibility; the
  // constructor only rejects degree < 1.
  explicit NumberField(UniPoly modulus, std::string generator_name = "t");

  const UniPoly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  const std::string& generator_name() const { return name_; }

 private:
  UniPoly modulus_;
  std::string name_;
};

// An element of K stored in the power basis 1, t, ..., t^(deg-1). Elements
// without a field are plain rationals and combine with elements of any field.
class AlgNum {
 public:
  AlgNum() = default;
  AlgNum(long v) : AlgNum(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  AlgNum(const Rational& v);                // NOLINT(google-explicit-constructor)

  static AlgNum generator(std::shared_ptr<const NumberField> field);

  const std::shared_ptr<const NumberField>& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rational rational_value() const;

  AlgNum inverse() const;

  friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
  friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }
  AlgNum operator-() const;

  friend bool operator==(const AlgNum& a, const AlgNum& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  AlgNum(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs);
  static std::shared_ptr<const NumberField> common_field(const AlgNum& a, const AlgNum& b);
  void normalize();

  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const AlgNum& x) { return x.is_zero(); }

using AlgUniPoly = BasicUniPoly<AlgNum>;
using AlgBiPoly = BasicBiPoly<AlgNum>;

AlgBiPoly lift(const BiPoly& p);

}  // namespace ksod
