#include "ksod/germ.hpp"

#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <type_traits>

#include "ksod/algebraic.hpp"
#include "ksod/factor.hpp"

namespace ksod {

namespace {

constexpr unsigned kMaxDepth = 256;

const char* const kFactorsHint = "; supply the branches explicitly with --factors";

template <class T>
struct Edge {
  Exponent start;
  Exponent end;
  unsigned step_z;
  unsigned step_w;
  unsigned length;
  BasicUniPoly<T> poly;
};

// Compact edges of the lower hull of the support of h, from the w-axis to the
// z-axis. h must have terms on both axes and vanish at the origin.
template <class T>
std::vector<Edge<T>> compact_edges(const BasicBiPoly<T>& h) {
  std::map<unsigned, unsigned> lowest;  // z-exponent -> least w-exponent
  for (const auto& [e, c] : h.terms()) {
    auto it = lowest.find(e.first);
    if (it == lowest.end() || e.second < it->second) lowest[e.first] = e.second;
  }
  std::vector<Exponent> hull;
  for (const auto& [a, b] : lowest) {
    while (hull.size() >= 2) {
      const Exponent& o = hull[hull.size() - 2];
      const Exponent& p = hull.back();
      const long cross = (static_cast<long>(p.first) - o.first) * (static_cast<long>(b) - o.second) -
                         (static_cast<long>(p.second) - o.second) * (static_cast<long>(a) - o.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.emplace_back(a, b);
  }

  std::vector<Edge<T>> edges;
  for (std::size_t i = 0; i + 1 < hull.size() && hull[i].second > 0; ++i) {
    const Exponent s = hull[i];
    const Exponent t = hull[i + 1];
    const unsigned da = t.first - s.first;
    const unsigned db = s.second - t.second;
    const unsigned len = std::gcd(da, db);
    Edge<T> edge{s, t, da / len, db / len, len, {}};
    std::vector<T> coeffs;
    for (unsigned k = 0; k <= len; ++k) {
      coeffs.push_back(h.coeff({s.first + k * edge.step_z, s.second - k * edge.step_w}));
    }
    edge.poly = BasicUniPoly<T>(std::move(coeffs));
    edges.push_back(std::move(edge));
  }
  return edges;
}

// Integers (x, y) with a*x + b*y = gcd(a, b).
std::pair<long, long> bezout(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_s, old_t};
}

// Toric chart adapted to an edge with primitive step (p, q), followed by the
// shift Y -> root + Y. With z = X^q Y^b, w = X^p Y^d and q*d - p*b = -1 the
// map is invertible on the torus (Y = z^p / w^q), the edge terms become
// X^N Y^e * phi(Y), and branches of h tangent to the edge along the root
// correspond to branches of the result at the origin other than X = 0.
template <class T>
BasicBiPoly<T> edge_chart(const BasicBiPoly<T>& h, unsigned p, unsigned q, const T& root) {
  auto [s, t] = bezout(static_cast<long>(q), static_cast<long>(p));
  const long d = -s;
  const long b = t;

  long min_x = std::numeric_limits<long>::max();
  long min_y = std::numeric_limits<long>::max();
  std::vector<std::tuple<long, long, T>> mapped;
  for (const auto& [e, c] : h.terms()) {
    const long xe = static_cast<long>(q) * e.first + static_cast<long>(p) * e.second;
    const long ye = b * static_cast<long>(e.first) + d * static_cast<long>(e.second);
    min_x = std::min(min_x, xe);
    min_y = std::min(min_y, ye);
    mapped.emplace_back(xe, ye, c);
  }

  long max_y = 0;
  for (const auto& [xe, ye, c] : mapped) max_y = std::max(max_y, ye - min_y);
  std::vector<T> root_pow{T(1)};
  for (long i = 1; i <= max_y; ++i) {
    T next = root_pow.back() * root;
    root_pow.push_back(next);
  }

  BasicBiPoly<T> out;
  for (const auto& [xe, ye, c] : mapped) {
    const auto r = static_cast<unsigned>(xe - min_x);
    const auto sy = static_cast<unsigned long>(ye - min_y);
    for (unsigned long k = 0; k <= sy; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), sy, k);
      T term = c * T(Rational(binom)) * root_pow[sy - k];
      out.add_term({r, static_cast<unsigned>(k)}, term);
    }
  }
  return out;
}

template <class T>
unsigned count_branches(const BasicBiPoly<T>& g, unsigned depth);

template <class T>
unsigned multiple_root_branches(const BasicBiPoly<T>& h, const Edge<T>& edge, const BasicUniPoly<T>& roots,
                                unsigned depth) {
  if constexpr (std::is_same_v<T, Rational>) {
    unsigned count = 0;
    for (const auto& factor : irreducible_factors(roots)) {
      if (factor.degree() == 1) {
        const Rational root = -factor.coeff(0);
        count += count_branches(edge_chart(h, edge.step_z, edge.step_w, root), depth + 1);
        continue;
      }
      // Conjugate roots carry isomorphic branch configurations, so one root
      // in Q[t]/(factor) stands for all of them.
      auto field = std::make_shared<const NumberField>(factor);
      const AlgNum root = AlgNum::generator(field);
      const auto lifted = lift(h);
      count += static_cast<unsigned>(factor.degree()) *
               count_branches(edge_chart(lifted, edge.step_z, edge.step_w, root), depth + 1);
    }
    return count;
  } else {
    if (roots.degree() != 1) {
      throw Error(ErrorKind::ExtensionUnsupported,
                  std::string("Newton-Puiseux recursion needs a second field extension") + kFactorsHint);
    }
    const T root = -roots.coeff(0);
    return count_branches(edge_chart(h, edge.step_z, edge.step_w, root), depth + 1);
  }
}

template <class T>
unsigned count_branches(const BasicBiPoly<T>& g, unsigned depth) {
  if (depth > kMaxDepth) {
    throw Error(ErrorKind::RecursionLimit, std::string("Newton-Puiseux recursion did not terminate") + kFactorsHint);
  }
  const Exponent content = g.min_exponents();
  if (content.first > 1 || content.second > 1) {
    throw Error(ErrorKind::NotIsolated, "germ has a repeated coordinate-axis component");
  }
  unsigned count = content.first + content.second;
  const auto h = g.divide_monomial(content);
  if (!is_zero(h.constant_term())) return count;

  for (const auto& edge : compact_edges(h)) {
    const auto multiple = gcd(edge.poly, edge.poly.derivative());
    const int distinct = squarefree_part(edge.poly).degree();
    if (multiple.degree() <= 0) {
      count += static_cast<unsigned>(distinct);
      continue;
    }
    const auto multiple_roots = squarefree_part(multiple);
    count += static_cast<unsigned>(distinct - multiple_roots.degree());
    count += multiple_root_branches(h, edge, multiple_roots, depth);
  }
  return count;
}

}  // namespace

unsigned order_at_origin(const BiPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "order of the zero polynomial");
  unsigned order = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : g.terms()) order = std::min(order, e.first + e.second);
  return order;
}

bool is_isolated(const BiPoly& g) {
  if (g.is_zero() || !is_zero(g.constant_term())) return false;
  return is_squarefree(g);
}

std::vector<NewtonEdge> newton_polygon(const BiPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Newton polygon of the zero polynomial");
  if (!is_zero(g.constant_term())) throw Error(ErrorKind::InvalidInput, "germ does not vanish at the origin");
  const auto h = g.divide_monomial(g.min_exponents());
  if (!is_zero(h.constant_term())) {
    throw Error(ErrorKind::MonomialGerm, "germ is a monomial times a unit; it has no compact Newton edges");
  }
  std::vector<NewtonEdge> out;
  for (auto& e : compact_edges(h)) {
    out.push_back({e.start, e.end, e.step_z, e.step_w, e.length, std::move(e.poly)});
  }
  return out;
}

BranchReport branch_count(const BiPoly& g) {
  if (!is_isolated(g)) {
    throw Error(ErrorKind::NotIsolated, "germ " + to_string(g) +
                                            " is not an isolated curve singularity (it must vanish at the origin "
                                            "and be squarefree)");
  }
  BranchReport r;
  r.order = order_at_origin(g);
  r.cAn_index = r.order - 1;
  r.branch_count = count_branches(g, 0);
  r.isolated = true;
  return r;
}

BranchReport branch_count_factored(std::span<const BiPoly> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidInput, "empty factor list");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (gcd(factors[i], factors[j]).total_degree() > 0) {
        throw Error(ErrorKind::CommonFactor, "factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                 " share a common factor");
      }
    }
  }
  BranchReport total;
  total.isolated = true;
  for (const auto& f : factors) {
    const BranchReport r = branch_count(f);
    total.order += r.order;
    total.branch_count += r.branch_count;
  }
  total.cAn_index = total.order - 1;
  return total;
}

}  // namespace ksod
