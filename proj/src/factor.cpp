#include "ksod/factor.hpp"

#include <algorithm>
#include <optional>

namespace ksod {

namespace {

constexpr std::size_t kMaxKroneckerCandidates = 4'000'000;

// Scales p to a primitive polynomial with integer coefficients.
UniPoly primitive_integer(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, Integer(c.get_den()));
  Integer num = 0;
  for (const auto& c : p.coefficients()) num = gcd(num, Integer(c.get_num() * (den / c.get_den())));
  std::vector<Rational> v;
  for (const auto& c : p.coefficients()) v.emplace_back(Rational(c * den / num));
  if (!v.empty() && sgn(v.back()) < 0) {
    for (auto& x : v) x = -x;
  }
  return UniPoly(std::move(v));
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool has_integer_coefficients(const UniPoly& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

// Searches for an integer factor of exact degree k by interpolating
// through divisors of p at k+1 sample points (Kronecker).
std::optional<UniPoly> kronecker_factor(const UniPoly& p, int k) {
  struct Sample {
    Integer x;
    std::vector<Integer> divisors;
  };
  std::vector<Sample> samples;
  for (long step = 0; step <= 40; ++step) {
    const long x = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    const Rational v = p(Rational(x));
    if (is_zero(v)) continue;  // cannot happen without rational roots
    samples.push_back({Integer(x), positive_divisors(v.get_num())});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });
  samples.resize(static_cast<std::size_t>(k + 1));

  std::size_t combos = 1;
  for (const auto& s : samples) {
    combos *= 2 * s.divisors.size();
    if (combos > kMaxKroneckerCandidates) {
      throw Error(ErrorKind::ExtensionUnsupported,
                  "irreducibility certification exceeds search budget; supply the factors with --factors");
    }
  }

  // Lagrange basis through the sample abscissae.
  std::vector<UniPoly> basis;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    UniPoly li = UniPoly::constant(Rational(1));
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (i == j) continue;
      Rational denom = Rational(samples[i].x - samples[j].x);
      li = li * UniPoly(std::vector<Rational>{Rational(-samples[j].x) / denom, Rational(1) / denom});
    }
    basis.push_back(li);
  }

  std::vector<std::size_t> idx(samples.size(), 0);
  for (std::size_t n = 0; n < combos; ++n) {
    std::size_t rem = n;
    UniPoly cand;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const std::size_t choices = 2 * samples[i].divisors.size();
      const std::size_t pick = rem % choices;
      rem /= choices;
      Rational y(samples[i].divisors[pick / 2]);
      if (pick % 2 == 1) y = -y;
      cand = cand + basis[i] * UniPoly::constant(y);
    }
    if (cand.degree() != k || sgn(cand.leading()) < 0 || !has_integer_coefficients(cand)) continue;
    if (divmod(p, cand).second.is_zero()) return cand;
  }
  return std::nullopt;
}

void split_rootless(const UniPoly& p, std::vector<UniPoly>& out) {
  const int d = p.degree();
  if (d <= 0) return;
  if (d <= 3) {
    out.push_back(p.monic());
    return;
  }
  if (d > 6) {
    throw Error(ErrorKind::ExtensionUnsupported,
                "cannot certify irreducibility of a degree " + std::to_string(d) +
                    " factor; supply the branches with --factors");
  }
  for (int k = 2; k <= d / 2; ++k) {
    if (auto f = kronecker_factor(p, k)) {
      split_rootless(*f, out);
      split_rootless(primitive_integer(divmod(p, *f).first), out);
      return;
    }
  }
  out.push_back(p.monic());
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational roots of the zero polynomial");
  UniPoly q = primitive_integer(p);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (is_zero(q.coeff(low))) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    q = UniPoly(std::vector<Rational>(q.coefficients().begin() + static_cast<long>(low), q.coefficients().end()));
  }
  if (q.degree() >= 1) {
    const auto num_divs = positive_divisors(q.coeff(0).get_num());
    const auto den_divs = positive_divisors(q.leading().get_num());
    for (const auto& r : num_divs) {
      for (const auto& s : den_divs) {
        if (gcd(r, s) != 1) continue;
        for (int sign : {1, -1}) {
          Rational x(Integer(sign * r), s);
          x.canonicalize();
          if (is_zero(q(x))) roots.push_back(x);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<UniPoly> irreducible_factors(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of the zero polynomial");
  std::vector<UniPoly> out;
  UniPoly rest = primitive_integer(p);
  for (const auto& r : rational_roots(rest)) {
    UniPoly lin(std::vector<Rational>{-r, Rational(1)});
    out.push_back(lin);
    rest = divmod(rest, lin).first;
  }
  split_rootless(primitive_integer(rest), out);
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coefficients() < b.coefficients();
  });
  return out;
}

}  // namespace ksod
