// Isolated compound A_n threefold germs xy + g(z, w) and their local class
// groups, plus the ADE catalog.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ksod/poly.hpp"

namespace ksod {

enum class AdeFamily { A, D, E };

struct AdeLabel {
  AdeFamily family = AdeFamily::A;
  unsigned index = 1;

  std::string to_string() const;  // "A3", "D4", "E7"
  friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

// Accepts "A", "D", "E" (case-insensitive). Throws UnknownLabel.
AdeFamily parse_ade_family(const std::string& s);

// "A1", "d_5", "E8". Returns nullopt if `s` does not have that shape.
std::optional<AdeLabel> parse_ade_label(const std::string& s);

enum class SingularitySource { Germ, Ade, Branches };

struct LocalSingularity {
  SingularitySource source = SingularitySource::Branches;
  std::optional<BiPoly> germ;      // the (z, w)-part g
  std::optional<AdeLabel> ade;
  std::optional<unsigned> n;       // cA_n index; unknown for raw branch data
  unsigned br = 1;
  unsigned cl_rank = 0;            // br - 1
  bool node = false;               // ordinary double point xy + zw

  std::string describe() const;
};

LocalSingularity classify_cAn(const BiPoly& g);

// Same, with g supplied as a list of pairwise coprime factors.
LocalSingularity classify_cAn_factored(std::span<const BiPoly> factors);

// Throws UnknownLabel outside A_n (n >= 1), D_n (n >= 4), E_6..E_8.
LocalSingularity ade_lookup(AdeFamily family, unsigned index);

// Stored (z, w)-part of the catalog equation.
BiPoly ade_germ(AdeFamily family, unsigned index);

// A singular point known only through its branch number (br >= 1).
LocalSingularity from_branches(unsigned br);

struct AdeRow {
  std::string type;  // "A_{2k}", "D_{2k-1}", "E_6", ...
  std::optional<unsigned> k;
  AdeLabel label;
  BiPoly germ;
  unsigned br = 0;
  unsigned cl_rank = 0;
};

// The seven table rows instantiated for k in [k_min, k_max]; rows whose
// parameter range excludes k are skipped, E rows appear once.
std::vector<AdeRow> ade_catalog_rows(unsigned k_min, unsigned k_max);

}  // namespace ksod
