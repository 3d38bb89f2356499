#include "ksod/algebraic.hpp"

#include <stdexcept>

namespace ksod {

NumberField::NumberField(UniPoly modulus, std::string generator_name)
    : modulus_(modulus.monic()), name_(std::move(generator_name)) {
  if (modulus_.degree() < 1) {
    throw Error(ErrorKind::InvalidInput, "number field modulus must have degree >= 1");
  }
}

AlgNum::AlgNum(const Rational& v) {
  if (!ksod::is_zero(v)) coeffs_.push_back(v);
}

AlgNum::AlgNum(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

AlgNum AlgNum::generator(std::shared_ptr<const NumberField> field) {
  auto f = field;
  return AlgNum(std::move(f), {Rational(0), Rational(1)});
}

void AlgNum::normalize() {
  if (field_ && static_cast<int>(coeffs_.size()) > field_->degree()) {
    UniPoly r = divmod(UniPoly(coeffs_), field_->modulus()).second;
    coeffs_ = r.coefficients();
  }
  while (!coeffs_.empty() && ksod::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational AlgNum::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidInput, "algebraic number is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

std::shared_ptr<const NumberField> AlgNum::common_field(const AlgNum& a, const AlgNum& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (a.field_->modulus() == b.field_->modulus()) return a.field_;
  throw std::logic_error("arithmetic between different number fields");
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return AlgNum(AlgNum::common_field(a, b), std::move(v));
}

AlgNum AlgNum::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return AlgNum(field_, std::move(v));
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  if (a.is_zero() || b.is_zero()) return AlgNum();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return AlgNum(AlgNum::common_field(a, b), std::move(v));
}

AlgNum AlgNum::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero in number field");
  if (is_rational()) return AlgNum(field_, {Rational(1) / coeffs_[0]});
  auto [g, s] = half_extended_gcd(UniPoly(coeffs_), field_->modulus());
  if (g.degree() != 0) {
    throw Error(ErrorKind::InvalidInput, "element is not invertible: field modulus is reducible");
  }
  return AlgNum(field_, s.coefficients());
}

std::string AlgNum::to_string() const {
  if (coeffs_.empty()) return "0";
  if (coeffs_.size() == 1) return ksod::to_string(coeffs_[0]);
  return "(" + ksod::to_string(UniPoly(coeffs_), field_ ? field_->generator_name() : "t") + ")";
}

AlgBiPoly lift(const BiPoly& p) {
  AlgBiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, AlgNum(c));
  return out;
}

}  // namespace ksod
