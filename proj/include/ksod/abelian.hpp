#pragma once

#include <string>
#include <vector>

#include "ksod/poly.hpp"

namespace ksod {

// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with
// 1 < d1 | d2 | ... | dk.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  static FinAbGroup free(unsigned rank);

  // Direct sum of cyclic groups Z/n; n = 0 contributes a copy of Z and
  // n = +-1 contributes nothing.
  static FinAbGroup from_cyclic_orders(const std::vector<Integer>& orders);

  unsigned free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool has_torsion() const { return !factors_.empty(); }

  // Direct sum of k copies.
  FinAbGroup power(unsigned k) const;

  friend FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
  }

  // "0", "Z", "Z^2 + Z/2 + Z/6".
  std::string to_string() const;

 private:
  unsigned free_rank_ = 0;
  std::vector<Integer> factors_;
};

}  // namespace ksod
