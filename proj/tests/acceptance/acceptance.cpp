// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "ksod/blowup.hpp"
#include "ksod/cli.hpp"
#include "ksod/error.hpp"
#include "ksod/germ.hpp"
#include "ksod/local.hpp"
#include "ksod/matrix.hpp"
#include "ksod/quiver.hpp"
#include "ksod/verdict.hpp"

using namespace ksod;
using ksod::testing::Rng;
using ksod::testing::uniform;

namespace {

// Collects mismatches; an empty list means the criterion holds.
struct Check {
  std::vector<std::string> problems;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
};

const BiPoly Z = BiPoly::z();
const BiPoly W = BiPoly::w();
BiPoly c(long v) { return BiPoly::constant(Rational(v)); }

std::string str(unsigned v) { return std::to_string(v); }

void ade_catalog(Check& ch) {
  struct Expect {
    std::string type;
    unsigned br;
    unsigned cl;
  };
  const std::vector<Expect> table = {{"A_{2k}", 1, 0}, {"A_{2k-1}", 2, 1}, {"D_{2k}", 3, 2}, {"D_{2k-1}", 2, 1},
                                     {"E_6", 1, 0},    {"E_7", 2, 1},      {"E_8", 1, 0}};
  std::set<std::string> seen;
  for (const auto& row : ade_catalog_rows(1, 3)) {
    const LocalSingularity s = classify_cAn(row.germ);
    for (const auto& e : table) {
      if (e.type != row.type) continue;
      seen.insert(row.label.to_string());
      ch.expect(s.br == e.br && s.cl_rank == e.cl,
                row.label.to_string() + ": got (" + str(s.br) + "," + str(s.cl_rank) + "), want (" + str(e.br) + "," + str(e.cl) + ")");
    }
  }
  // k = 1..3 gives A1..A6, D4..D6 (D_{2k-1} needs k >= 3) and E6..E8.
  ch.expect(seen.size() == 12, "expected 12 catalog rows, saw " + std::to_string(seen.size()));
}

void del_pezzo_table(Check& ch) {
  std::ostringstream out, err;
  ch.expect(run_cli({"table", "delpezzo"}, out, err) == kExitOk, "table delpezzo failed: " + err.str());
  const std::vector<std::vector<std::string>> want = {
      {"1", "28", "1", "8", "21", "No"}, {"2", "16", "1", "7", "10", "No"}, {"3", "10", "1", "6", "5", "No"},
      {"4", "6", "1", "5", "2", "No"},   {"5", "3", "1", "4", "0", "Unknown"}, {"6", "1", "2", "3", "0", "Yes"}};
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);  // header
  std::vector<std::vector<std::string>> got;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cols(line);
    std::string cell;
    while (std::getline(cols, cell, '|')) {
      const auto b = cell.find_first_not_of(' ');
      const auto e = cell.find_last_not_of(' ');
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    got.push_back(cells);
  }
  ch.expect(got == want, "table rows differ:\n" + out.str());
}

void curve_formulas(Check& ch) {
  for (unsigned n = 2; n <= 6; ++n) {
    // n lines through one point: one singular point with n branches.
    ch.expect(curve_k_minus_one(CurveSpec{std::vector<CurvePiece>{{n, {n}}}}).free_rank() == 0,
              str(n) + " concurrent lines");
    ch.expect(curve_k_minus_one(CurveSpec{DualGraph::cycle(n)}).free_rank() == 1, "cycle of " + str(n));
  }
  ch.expect(curve_k_minus_one(CurveSpec{std::vector<CurvePiece>{{1, {2}}}}).free_rank() == 1, "nodal cubic");
  ch.expect(curve_k_minus_one(CurveSpec{DualGraph::cycle(1)}).free_rank() == 1, "nodal cubic as a graph");

  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const DualGraph tree = ksod::testing::random_tree(rng, static_cast<unsigned>(uniform(rng, 1, 15)));
    ch.expect(curve_k_minus_one(CurveSpec{tree}).free_rank() == 0, "random tree");
  }
  for (int t = 0; t < 1000; ++t) {
    const DualGraph g = ksod::testing::random_multigraph(rng, 8, 12);
    // betti1 oracle: E - V + (number of components), via a separate BFS.
    std::vector<int> seen(g.vertex_count, 0);
    unsigned comps = 0;
    for (unsigned s = 0; s < g.vertex_count; ++s) {
      if (seen[s]) continue;
      ++comps;
      std::vector<unsigned> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        const unsigned v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.edges) {
          for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (x == v && !seen[y]) {
              seen[y] = 1;
              stack.push_back(y);
            }
          }
        }
      }
    }
    const unsigned oracle = static_cast<unsigned>(g.edges.size()) + comps - g.vertex_count;
    ch.expect(curve_k_minus_one(CurveSpec{g}).free_rank() == oracle && betti1(g) == oracle, "random multigraph");
  }
}

std::size_t count_walks(const DualGraph& g) {
  std::size_t total = 0;
  std::function<void(unsigned, long)> go = [&](unsigned at, long last) {
    ++total;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (static_cast<long>(e) == last) continue;
      const auto [a, b] = g.edges[e];
      if (a == at) go(b, static_cast<long>(e));
      if (b == at) go(a, static_cast<long>(e));
    }
  };
  for (unsigned v = 0; v < g.vertex_count; ++v) go(v, -1);
  return total;
}

void quiver_oracle(Check& ch) {
  Rng rng(77);
  for (int t = 0; t < 100; ++t) {
    const auto v = static_cast<unsigned>(uniform(rng, 1, 12));
    const DualGraph tree = ksod::testing::random_tree(rng, v);
    const std::size_t dim = algebra_basis(burban_quiver(tree)).dimension();
    ch.expect(dim == count_walks(tree), "walk count for V=" + str(v));
    ch.expect(dim == static_cast<std::size_t>(v) * v, "V^2 for V=" + str(v));
  }
  const auto q = burban_quiver(DualGraph::chain(2));
  std::set<std::string> names;
  for (const auto& p : algebra_basis(q).paths) names.insert(path_name(q, p));
  ch.expect(names == std::set<std::string>{"e1", "e2", "a", "a*"}, "A2 basis");
}

void snf_suite(Check& ch) {
  Rng rng(8);
  for (int t = 0; t < 1000; ++t) {
    const auto r = static_cast<std::size_t>(uniform(rng, 1, 8));
    const auto k = static_cast<std::size_t>(uniform(rng, 1, 8));
    const IntMatrix m = ksod::testing::random_matrix(rng, r, k, 9);
    const SmithForm f = smith_normal_form(m);
    ch.expect(f.u * m * f.v == f.d, "U M V = D");
    ch.expect(f.d.is_diagonal(), "D diagonal");
    const auto diag = f.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      ch.expect(diag[i] >= 0 && (diag[i] == 0 ? diag[i + 1] == 0 : diag[i + 1] % diag[i] == 0), "divisibility chain");
    }
    ch.expect(abs(f.u.determinant()) == 1 && abs(f.v.determinant()) == 1, "unimodular");
    if (r == k && m.determinant() != 0) {
      Integer prod = 1;
      for (const auto& d : diag) prod *= d;
      ch.expect(prod == abs(m.determinant()), "|det| preserved");
    }
  }
}

// g(z + a w + b w^2, w + d z)
BiPoly substitute(const BiPoly& g, long a, long b, long d) {
  const BiPoly zz = Z + c(a) * W + c(b) * W * W;
  const BiPoly ww = W + c(d) * Z;
  BiPoly out;
  for (const auto& [e, coef] : g.terms()) out = out + BiPoly::constant(coef) * zz.pow(e.first) * ww.pow(e.second);
  return out;
}

void branch_suite(Check& ch) {
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned b = 1; b <= 6; ++b) {
      for (long cc : {1L, -1L, 2L, -3L, 5L}) {
        const BiPoly g = Z.pow(a) - c(cc) * W.pow(b);
        if (!is_isolated(g)) continue;
        ch.expect(branch_count(g).branch_count == std::gcd(a, b),
                  "z^" + str(a) + " - " + std::to_string(cc) + " w^" + str(b));
      }
    }
  }

  Rng rng(4242);
  const auto rows = ade_catalog_rows(1, 3);
  int products = 0;
  int attempts = 0;
  while (products < 200 && attempts < 5000) {
    ++attempts;
    const auto& r1 = rows[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rows.size()) - 1))];
    const auto& r2 = rows[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rows.size()) - 1))];
    const BiPoly g = substitute(r1.germ, uniform(rng, -2, 2), uniform(rng, -2, 2), 0);
    const long a = uniform(rng, -2, 2);
    const long d = uniform(rng, -1, 1);
    if (a * d == 1) continue;  // singular linear part
    const BiPoly h = substitute(r2.germ, a, uniform(rng, -2, 2), d);
    if (gcd(g, h).total_degree() > 0) continue;
    ++products;
    try {
      ch.expect(branch_count(g * h).branch_count == r1.br + r2.br, "additivity on " + r1.label.to_string() + " * " + r2.label.to_string());
    } catch (const Error& e) {
      ch.expect(false, std::string("additivity raised: ") + e.what());
    }
  }
  ch.expect(products == 200, "only " + std::to_string(products) + " coprime products generated");

  const BiPoly rec = (Z - W * W) * (Z - W * W - W.pow(3));
  ch.expect(branch_count(rec).branch_count == 2, "(z-w^2)(z-w^2-w^3)");
}

void knorrer(Check& ch) {
  for (const auto& row : ade_catalog_rows(1, 3)) {
    const unsigned br = branch_count(row.germ).branch_count;
    ch.expect(classify_cAn(row.germ).cl_rank == br - 1, "Knorrer on " + row.label.to_string());
  }
}

void blowup_routes(Check& ch) {
  Rng rng(50);
  for (int t = 0; t < 50; ++t) {
    const DualGraph g = ksod::testing::random_multigraph(rng, 7, 9);
    BlowupPipeline p;
    BlowupCenter center;
    center.kind = BlowupCenter::Kind::NodalCurve;
    center.graph = g;
    p.steps.push_back(center);
    const BlowupReport r = run_pipeline(p);
    const FinAbGroup via_sum = blowup_k_theory(FinAbGroup(), curve_k_minus_one(CurveSpec{g}), 2);
    unsigned betti_sum = 0;
    bool all_trees = true;
    for (const auto& comp : connected_components(g)) {
      const DualGraph sub = induced_subgraph(g, comp);
      betti_sum += betti1(sub);
      all_trees = all_trees && is_tree_of_lines(sub);
    }
    ch.expect(r.k_minus_one == via_sum && via_sum.free_rank() == betti_sum, "rank routes disagree");
    ch.expect((r.verdict.decision == Decision::Yes) == all_trees, "verdict vs tree characterization");
    ch.expect((r.verdict.decision == Decision::No) == (betti_sum > 0), "No iff obstructed");
  }
}

void example_verdicts(Check& ch) {
  const Verdict quadric = decide(nodal_quadric_spec());
  ch.expect(quadric.decision == Decision::Yes && quadric.certificate, "nodal quadric");
  if (quadric.certificate) verify_certificate(*quadric.certificate);

  const Verdict section = decide(kawamata_p2p2_spec());
  ch.expect(section.decision == Decision::Yes && section.certificate, "P2xP2 section");
  if (section.certificate) verify_certificate(*section.certificate);

  VarietySpec cubic;
  cubic.singularities = {ade_lookup(AdeFamily::A, 1)};
  cubic.pic_rank = 2;
  cubic.cl_rank = 2;
  const Verdict factorial = decide(cubic);
  ch.expect(factorial.decision == Decision::No && factorial.obstruction &&
                *factorial.obstruction == FinAbGroup::free(1),
            "1-node factorial cubic blow-up");

  DualGraph three_nodes;
  three_nodes.vertex_count = 1;
  three_nodes.edges = {{0, 0}, {0, 0}, {0, 0}};
  const Verdict curve = decide(BlowupPipeline{{BlowupCenter{BlowupCenter::Kind::NodalCurve, three_nodes, 1, {}}}});
  ch.expect(curve.decision == Decision::No && curve.obstruction && curve.obstruction->free_rank() == 3,
            "3-node irreducible curve");

  VarietySpec smooth;
  smooth.pic_rank = 1;
  smooth.cl_rank = 1;
  const Verdict s = decide(smooth);
  ch.expect(s.decision == Decision::Yes && s.certificate, "smooth input");
  if (s.certificate) verify_certificate(*s.certificate);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Check&)>> criteria = {
      {"ADE catalog reproduction", ade_catalog},
      {"del Pezzo table reproduction", del_pezzo_table},
      {"curve rank formulas", curve_formulas},
      {"quiver algebra dimension oracle", quiver_oracle},
      {"Smith normal form property suite", snf_suite},
      {"branch-count oracle suite", branch_suite},
      {"Knorrer consistency", knorrer},
      {"blow-up route agreement", blowup_routes},
      {"example verdicts", example_verdicts},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check ch;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(ch);
    } catch (const std::exception& e) {
      ch.problems.push_back(std::string("exception: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = ch.problems.empty();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << ch.cases
              << " checks, " << static_cast<long>(ms) << " ms)\n";
    for (const auto& p : ch.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
