#include "ksod/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ksod/error.hpp"

namespace ksod {

namespace {

struct UnionFind {
  std::vector<unsigned> parent;

  explicit UnionFind(unsigned n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

  unsigned find(unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

void DualGraph::validate() const {
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorKind::InvalidInput, "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                                               ") has an endpoint outside 0.." +
                                               std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
    }
  }
  if (!rational.empty() && rational.size() != vertex_count) {
    throw Error(ErrorKind::InvalidInput, "rational flags must have one entry per vertex");
  }
  if (!smooth_p1.empty() && smooth_p1.size() != vertex_count) {
    throw Error(ErrorKind::InvalidInput, "smooth_p1 flags must have one entry per vertex");
  }
  for (unsigned v = 0; v < vertex_count && !smooth_p1.empty(); ++v) {
    if (smooth_p1[v] && (!is_rational(v) || has_loop(v))) {
      throw Error(ErrorKind::InvalidInput,
                  "vertex " + std::to_string(v) + " is flagged smooth P^1 but is not rational or carries a loop");
    }
  }
}

bool DualGraph::is_rational(unsigned v) const { return rational.empty() || rational[v]; }

bool DualGraph::has_loop(unsigned v) const {
  return std::any_of(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v && e.second == v; });
}

bool DualGraph::is_smooth_p1(unsigned v) const {
  if (!smooth_p1.empty()) return smooth_p1[v];
  return is_rational(v) && !has_loop(v);
}

DualGraph DualGraph::chain(unsigned n) {
  DualGraph g;
  g.vertex_count = n;
  for (unsigned i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

DualGraph DualGraph::cycle(unsigned n) {
  DualGraph g = chain(n);
  if (n == 1) {
    g.edges.emplace_back(0, 0);
  } else if (n >= 2) {
    g.edges.emplace_back(n - 1, 0);
  }
  return g;
}

DualGraph DualGraph::star(unsigned leaves) {
  DualGraph g;
  g.vertex_count = leaves + 1;
  for (unsigned i = 1; i <= leaves; ++i) g.edges.emplace_back(0, i);
  return g;
}

std::vector<std::vector<unsigned>> connected_components(const DualGraph& g) {
  g.validate();
  UnionFind uf(g.vertex_count);
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::map<unsigned, std::vector<unsigned>> groups;
  for (unsigned v = 0; v < g.vertex_count; ++v) groups[uf.find(v)].push_back(v);
  std::vector<std::vector<unsigned>> out;
  for (auto& [root, vs] : groups) out.push_back(std::move(vs));
  return out;
}

DualGraph induced_subgraph(const DualGraph& g, const std::vector<unsigned>& vertices) {
  std::map<unsigned, unsigned> relabel;
  for (unsigned i = 0; i < vertices.size(); ++i) relabel[vertices[i]] = i;
  DualGraph out;
  out.vertex_count = static_cast<unsigned>(vertices.size());
  for (const auto& [a, b] : g.edges) {
    auto ia = relabel.find(a);
    auto ib = relabel.find(b);
    if (ia != relabel.end() && ib != relabel.end()) out.edges.emplace_back(ia->second, ib->second);
  }
  for (unsigned v : vertices) {
    out.rational.push_back(g.is_rational(v));
    out.smooth_p1.push_back(g.is_smooth_p1(v));
  }
  return out;
}

unsigned betti1(const DualGraph& g) {
  const auto comps = connected_components(g);
  return static_cast<unsigned>(g.edges.size() + comps.size() - g.vertex_count);
}

bool is_tree_of_lines(const DualGraph& g) {
  if (g.vertex_count == 0) return false;
  if (connected_components(g).size() != 1) return false;
  if (betti1(g) != 0) return false;
  for (unsigned v = 0; v < g.vertex_count; ++v) {
    if (g.has_loop(v) || !g.is_smooth_p1(v)) return false;
  }
  return true;
}

unsigned curve_piece_rank(const CurvePiece& piece) {
  if (piece.components == 0) throw Error(ErrorKind::InvalidInput, "a curve piece needs at least one component");
  long br = 0;
  for (unsigned b : piece.branches) {
    if (b == 0) throw Error(ErrorKind::InvalidInput, "a singular point has at least one branch");
    br += b;
  }
  const long rank = br - static_cast<long>(piece.branches.size()) - static_cast<long>(piece.components) + 1;
  if (rank < 0) {
    throw Error(ErrorKind::NegativeRank, "branch data gives rank " + std::to_string(rank) +
                                             "; the components cannot form a connected curve");
  }
  return static_cast<unsigned>(rank);
}

std::vector<CurvePiece> curve_pieces(const DualGraph& g) {
  std::vector<CurvePiece> out;
  for (const auto& comp : connected_components(g)) {
    CurvePiece piece;
    piece.components = static_cast<unsigned>(comp.size());
    const DualGraph sub = induced_subgraph(g, comp);
    piece.branches.assign(sub.edges.size(), 2);
    out.push_back(std::move(piece));
  }
  return out;
}

FinAbGroup curve_k_minus_one(const CurveSpec& spec) {
  const auto pieces = std::holds_alternative<DualGraph>(spec.data) ? curve_pieces(std::get<DualGraph>(spec.data))
                                                                   : std::get<std::vector<CurvePiece>>(spec.data);
  if (pieces.empty()) throw Error(ErrorKind::InvalidInput, "empty curve");
  unsigned rank = 0;
  for (const auto& p : pieces) rank += curve_piece_rank(p);
  return FinAbGroup::free(rank);
}

}  // namespace ksod
