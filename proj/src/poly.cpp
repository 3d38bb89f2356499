#include "ksod/poly.hpp"

#include <sstream>

namespace ksod {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

// Appends "c*m" with sign handling; `monomial` is empty for the constant term.
void append_term(std::string& out, const Rational& c, const std::string& monomial) {
  const bool negative = sgn(c) < 0;
  Rational mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += to_string(mag) + "*" + monomial;
  }
}

std::string power(const std::string& var, unsigned e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    append_term(out, c, power(var, static_cast<unsigned>(i)));
  }
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const unsigned dx = x.first.first + x.first.second;
    const unsigned dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string mono = power("z", e.first);
    const std::string wpart = power("w", e.second);
    if (!mono.empty() && !wpart.empty()) mono += "*";
    mono += wpart;
    append_term(out, c, mono);
  }
  return out;
}

namespace {

// Q[w][z]: index = z-degree, coefficients in Q[w].
using RecPoly = std::vector<UniPoly>;

void trim(RecPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RecPoly to_rec(const BiPoly& p) {
  RecPoly out;
  std::vector<std::vector<Rational>> coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (coeffs.size() <= e.first) coeffs.resize(e.first + 1);
    auto& row = coeffs[e.first];
    if (row.size() <= e.second) row.resize(e.second + 1, Rational(0));
    row[e.second] = c;
  }
  for (auto& row : coeffs) out.emplace_back(std::move(row));
  trim(out);
  return out;
}

BiPoly from_rec(const RecPoly& p) {
  BiPoly out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const auto& cs = p[a].coefficients();
    for (std::size_t b = 0; b < cs.size(); ++b) {
      out.add_term({static_cast<unsigned>(a), static_cast<unsigned>(b)}, cs[b]);
    }
  }
  return out;
}

int zdeg(const RecPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly content(const RecPoly& p) {
  UniPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

RecPoly divide_by(const RecPoly& p, const UniPoly& c) {
  RecPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(divmod(x, c).first);
  trim(out);
  return out;
}

RecPoly primitive_part(const RecPoly& p) {
  if (p.empty()) return p;
  return divide_by(p, content(p));
}

// Pseudo-remainder of a by b in z.
RecPoly prem(RecPoly a, const RecPoly& b) {
  const int db = zdeg(b);
  const UniPoly& lb = b.back();
  while (zdeg(a) >= db && !a.empty()) {
    const int shift = zdeg(a) - db;
    const UniPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) {
      auto& slot = a[static_cast<std::size_t>(j + shift)];
      slot = slot - la * b[static_cast<std::size_t>(j)];
    }
    trim(a);
  }
  return a;
}

UniPoly specialize_w(const RecPoly& p, const Rational& w0) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c(w0));
  return UniPoly(std::move(out));
}

// For primitive a, b: true when some w0 keeping both leading coefficients
// nonzero gives coprime specializations. A common factor of positive
// z-degree would survive every such specialization.
bool coprime_by_specialization(const RecPoly& a, const RecPoly& b) {
  constexpr int kTries = 8;
  int tried = 0;
  for (long k = 0; tried < kTries && k < 4 * kTries; ++k) {
    const Rational w0((k % 2 == 0) ? k / 2 : -(k + 1) / 2);
    if (is_zero(a.back()(w0)) || is_zero(b.back()(w0))) continue;
    ++tried;
    if (gcd(specialize_w(a, w0), specialize_w(b, w0)).degree() == 0) return true;
  }
  return false;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  RecPoly ra = to_rec(a);
  RecPoly rb = to_rec(b);
  if (ra.empty() && rb.empty()) return {};
  const UniPoly cont = gcd(content(ra), content(rb));
  ra = primitive_part(ra);
  rb = primitive_part(rb);
  if (ra.empty()) std::swap(ra, rb);
  if (zdeg(ra) < zdeg(rb)) std::swap(ra, rb);
  if (!rb.empty() && coprime_by_specialization(ra, rb)) {
    ra = {UniPoly::constant(Rational(1))};
    rb.clear();
  }
  while (!rb.empty()) {
    RecPoly r = prem(ra, rb);
    ra = std::move(rb);
    rb = primitive_part(r);
  }
  RecPoly result;
  for (const auto& c : ra) result.push_back(c * cont);
  trim(result);
  // Normalize the lex-leading coefficient (highest z, then highest w) to 1.
  const Rational lead = result.back().leading();
  BiPoly g = from_rec(result);
  return g * BiPoly::constant(Rational(1) / lead);
}

bool is_squarefree(const BiPoly& p) {
  if (p.is_zero()) return false;
  const BiPoly g = gcd(gcd(p, p.derivative_z()), p.derivative_w());
  return g.total_degree() == 0;
}

}  // namespace ksod
