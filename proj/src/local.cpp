#include "ksod/local.hpp"

#include <regex>

#include <cctype>

#include "ksod/error.hpp"
#include "ksod/germ.hpp"

namespace ksod {

namespace {

BiPoly zw_monomial(unsigned a, unsigned b) { return BiPoly::monomial(Rational(1), a, b); }

bool has_nondegenerate_quadratic_part(const BiPoly& g) {
  const Rational a = g.coeff({2, 0});
  const Rational b = g.coeff({1, 1});
  const Rational c = g.coeff({0, 2});
  return b * b - 4 * a * c != 0;
}

void check_label(AdeFamily family, unsigned index) {
  const bool ok = (family == AdeFamily::A && index >= 1) || (family == AdeFamily::D && index >= 4) ||
                  (family == AdeFamily::E && index >= 6 && index <= 8);
  if (!ok) throw Error(ErrorKind::UnknownLabel, "no ADE singularity " + AdeLabel{family, index}.to_string());
}

}  // namespace

std::string AdeLabel::to_string() const {
  const char f = family == AdeFamily::A ? 'A' : family == AdeFamily::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(index);
}

AdeFamily parse_ade_family(const std::string& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return AdeFamily::A;
      case 'D': return AdeFamily::D;
      case 'E': return AdeFamily::E;
      default: break;
    }
  }
  throw Error(ErrorKind::UnknownLabel, "unknown ADE family '" + s + "'");
}

std::optional<AdeLabel> parse_ade_label(const std::string& s) {
  static const std::regex re(R"(\s*([ADEade])\s*_?\s*(\d{1,6})\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  return AdeLabel{parse_ade_family(m[1]), static_cast<unsigned>(std::stoul(m[2]))};
}

std::string LocalSingularity::describe() const {
  std::string out;
  if (ade) {
    out = ade->to_string();
  } else if (germ) {
    out = "xy + " + to_string(*germ);
  } else {
    out = "br " + std::to_string(br);
  }
  if (n) out += " (cA_" + std::to_string(*n) + ")";
  return out;
}

LocalSingularity classify_cAn(const BiPoly& g) {
  const BranchReport r = branch_count(g);
  LocalSingularity s;
  s.source = SingularitySource::Germ;
  s.germ = g;
  s.n = r.cAn_index;
  s.br = r.branch_count;
  s.cl_rank = r.branch_count - 1;
  s.node = r.order == 2 && has_nondegenerate_quadratic_part(g);
  return s;
}

LocalSingularity classify_cAn_factored(std::span<const BiPoly> factors) {
  const BranchReport r = branch_count_factored(factors);
  BiPoly g = BiPoly::constant(Rational(1));
  for (const auto& f : factors) g = g * f;
  LocalSingularity s;
  s.source = SingularitySource::Germ;
  s.germ = g;
  s.n = r.cAn_index;
  s.br = r.branch_count;
  s.cl_rank = r.branch_count - 1;
  s.node = r.order == 2 && has_nondegenerate_quadratic_part(g);
  return s;
}

BiPoly ade_germ(AdeFamily family, unsigned index) {
  check_label(family, index);
  switch (family) {
    case AdeFamily::A: return zw_monomial(2, 0) + zw_monomial(0, index + 1);
    case AdeFamily::D: return zw_monomial(2, 1) + zw_monomial(0, index - 1);
    case AdeFamily::E:
      if (index == 6) return zw_monomial(3, 0) + zw_monomial(0, 4);
      if (index == 7) return zw_monomial(3, 0) + zw_monomial(1, 3);
      return zw_monomial(3, 0) + zw_monomial(0, 5);
  }
  return {};
}

LocalSingularity ade_lookup(AdeFamily family, unsigned index) {
  check_label(family, index);
  LocalSingularity s;
  s.source = SingularitySource::Ade;
  s.ade = AdeLabel{family, index};
  s.germ = ade_germ(family, index);
  s.n = family == AdeFamily::A ? 1 : 2;
  switch (family) {
    case AdeFamily::A: s.br = index % 2 == 1 ? 2 : 1; break;
    case AdeFamily::D: s.br = index % 2 == 0 ? 3 : 2; break;
    case AdeFamily::E: s.br = index == 7 ? 2 : 1; break;
  }
  s.cl_rank = s.br - 1;
  s.node = family == AdeFamily::A && index == 1;
  return s;
}

LocalSingularity from_branches(unsigned br) {
  if (br == 0) throw Error(ErrorKind::InvalidInput, "branch number must be at least 1");
  LocalSingularity s;
  s.source = SingularitySource::Branches;
  s.br = br;
  s.cl_rank = br - 1;
  return s;
}

std::vector<AdeRow> ade_catalog_rows(unsigned k_min, unsigned k_max) {
  if (k_min == 0 || k_min > k_max) throw Error(ErrorKind::OutOfRange, "k range must satisfy 1 <= k_min <= k_max");
  struct Family {
    const char* type;
    AdeFamily family;
    unsigned k_lo;
    unsigned (*index)(unsigned);
  };
  static const Family parametric[] = {
      {"A_{2k}", AdeFamily::A, 1, [](unsigned k) { return 2 * k; }},
      {"A_{2k-1}", AdeFamily::A, 1, [](unsigned k) { return 2 * k - 1; }},
      {"D_{2k}", AdeFamily::D, 2, [](unsigned k) { return 2 * k; }},
      {"D_{2k-1}", AdeFamily::D, 3, [](unsigned k) { return 2 * k - 1; }},
  };
  std::vector<AdeRow> rows;
  auto push = [&rows](const char* type, std::optional<unsigned> k, AdeFamily family, unsigned index) {
    const LocalSingularity s = ade_lookup(family, index);
    rows.push_back({type, k, *s.ade, *s.germ, s.br, s.cl_rank});
  };
  for (const auto& f : parametric) {
    for (unsigned k = std::max(k_min, f.k_lo); k <= k_max; ++k) push(f.type, k, f.family, f.index(k));
  }
  push("E_6", std::nullopt, AdeFamily::E, 6);
  push("E_7", std::nullopt, AdeFamily::E, 7);
  push("E_8", std::nullopt, AdeFamily::E, 8);
  return rows;
}

}  // namespace ksod
