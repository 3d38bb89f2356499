#include "ksod/abelian.hpp"

namespace ksod {

FinAbGroup FinAbGroup::free(unsigned rank) {
  FinAbGroup g;
  g.free_rank_ = rank;
  return g;
}

FinAbGroup FinAbGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  FinAbGroup g;
  std::vector<Integer> torsion;
  for (const auto& n : orders) {
    Integer m = abs(n);
    if (m == 0) {
      ++g.free_rank_;
    } else if (m != 1) {
      torsion.push_back(m);
    }
  }
  // Pairwise (gcd, lcm) replacement turns any list into a divisibility chain
  // with the same product.
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t j = i + 1; j < torsion.size(); ++j) {
      Integer d = gcd(torsion[i], torsion[j]);
      Integer l = lcm(torsion[i], torsion[j]);
      torsion[i] = d;
      torsion[j] = l;
    }
  }
  for (auto& t : torsion) {
    if (t != 1) g.factors_.push_back(t);
  }
  return g;
}

FinAbGroup FinAbGroup::power(unsigned k) const {
  FinAbGroup out;
  for (unsigned i = 0; i < k; ++i) out = direct_sum(out, *this);
  return out;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Integer> orders(a.free_rank_ + b.free_rank_, Integer(0));
  orders.insert(orders.end(), a.factors_.begin(), a.factors_.end());
  orders.insert(orders.end(), b.factors_.begin(), b.factors_.end());
  return FinAbGroup::from_cyclic_orders(orders);
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ == 1) {
    out = "Z";
  } else if (free_rank_ > 1) {
    out = "Z^" + std::to_string(free_rank_);
  }
  for (const auto& d : factors_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

}  // namespace ksod
