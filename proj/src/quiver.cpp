#include "ksod/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ksod/error.hpp"

namespace ksod {

void QuiverWithRelations::validate() const {
  for (const auto& a : arrows) {
    if (a.source >= vertices || a.target >= vertices) throw Error(ErrorKind::InvalidInput, "arrow endpoint out of range");
  }
  for (const auto& [i, j] : relations) {
    if (i >= arrows.size() || j >= arrows.size() || arrows[i].target != arrows[j].source) {
      throw Error(ErrorKind::InvalidInput, "relation is not a composable pair of arrows");
    }
  }
}

std::string QuiverWithRelations::to_string() const {
  std::ostringstream os;
  os << "vertices: " << vertices << "\n";
  for (const auto& a : arrows) os << "arrow " << a.name << ": " << a.source + 1 << " -> " << a.target + 1 << "\n";
  for (const auto& [i, j] : relations) os << "relation: " << arrows[i].name << " " << arrows[j].name << " = 0\n";
  return os.str();
}

std::string path_name(const QuiverWithRelations& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.start + 1);
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) out += ' ';
    out += q.arrows[p.arrows[k]].name;
  }
  return out;
}

QuiverWithRelations doubled_quiver(const DualGraph& g) {
  g.validate();
  QuiverWithRelations q;
  q.vertices = g.vertex_count;
  const bool single = g.edges.size() == 1;
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [u, v] = g.edges[k];
    if (u == v) throw Error(ErrorKind::NotATree, "loop at vertex " + std::to_string(u));
    const std::string name = single ? "a" : "a" + std::to_string(k + 1);
    const std::size_t fwd = q.arrows.size();
    q.arrows.push_back({u, v, name});
    q.arrows.push_back({v, u, name + "*"});
    q.relations.emplace_back(fwd, fwd + 1);
    q.relations.emplace_back(fwd + 1, fwd);
  }
  return q;
}

QuiverWithRelations burban_quiver(const DualGraph& tree) {
  if (!is_tree_of_lines(tree)) {
    throw Error(ErrorKind::NotATree, "Burban's algebra needs a connected tree of smooth projective lines");
  }
  return doubled_quiver(tree);
}

AlgebraBasis algebra_basis(const QuiverWithRelations& q, std::size_t length_bound) {
  q.validate();
  if (length_bound == 0) length_bound = q.vertices;
  if (length_bound < q.vertices) {
    throw Error(ErrorKind::InvalidInput, "length bound must be at least the number of vertices");
  }
  const std::set<std::pair<std::size_t, std::size_t>> zero(q.relations.begin(), q.relations.end());
  std::vector<std::vector<std::size_t>> out_arrows(q.vertices);
  for (std::size_t i = 0; i < q.arrows.size(); ++i) out_arrows[q.arrows[i].source].push_back(i);

  AlgebraBasis basis;
  std::vector<Path> stack;
  for (unsigned v = q.vertices; v-- > 0;) stack.push_back({v, {}});
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    if (p.arrows.size() == length_bound) {
      throw Error(ErrorKind::InfiniteDimensionalSuspected,
                  "nonzero path of length " + std::to_string(length_bound) + " found: " + path_name(q, p));
    }
    const unsigned at = p.arrows.empty() ? p.start : q.arrows[p.arrows.back()].target;
    const auto& next = out_arrows[at];
    for (auto it = next.rbegin(); it != next.rend(); ++it) {
      if (!p.arrows.empty() && zero.count({p.arrows.back(), *it})) continue;
      Path longer = p;
      longer.arrows.push_back(*it);
      stack.push_back(std::move(longer));
    }
    basis.paths.push_back(std::move(p));
  }
  return basis;
}

}  // namespace ksod
