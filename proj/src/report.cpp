#include "ksod/report.hpp"

#include <algorithm>
#include <sstream>

namespace ksod {

namespace {

std::string decision_text(Decision d) { return to_string(d); }

std::string indent(const std::string& block, const std::string& pad) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += pad + line + "\n";
  return out;
}

std::string certificate_text(const Certificate& c, const std::string& pad) {
  std::ostringstream os;
  os << pad << "certificate: " << to_string(c.kind) << "\n";
  for (std::size_t i = 0; i < c.quivers.size(); ++i) {
    os << pad << "algebra " << i + 1 << " (dim " << c.algebra_dimensions[i] << "):\n";
    os << indent(c.quivers[i].to_string(), pad + "  ");
  }
  for (unsigned n : c.algebra_orders) os << pad << "algebra: k[z]/(z^" << n << ")\n";
  for (const auto& part : c.parts) os << certificate_text(part, pad + "  ");
  return os.str();
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const FinAbGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(to_json(d));
  return {{"free_rank", g.free_rank()}, {"invariant_factors", factors}, {"group", g.to_string()}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const NewtonEdge& e) {
  return {{"start", {e.start.first, e.start.second}},
          {"end", {e.end.first, e.end.second}},
          {"direction", {e.step_z, e.step_w}},
          {"lattice_length", e.lattice_length},
          {"edge_polynomial", to_string(e.edge_polynomial)}};
}

Json to_json(const BranchReport& r) {
  return {{"order", r.order},
          {"cA_index", r.cAn_index},
          {"branches", r.branch_count},
          {"local_cl_rank", r.branch_count - 1},
          {"isolated", r.isolated}};
}

Json to_json(const LocalSingularity& s) {
  Json j = {{"branches", s.br}, {"cl_rank", s.cl_rank}, {"node", s.node}, {"local_class_group", FinAbGroup::free(s.cl_rank).to_string()}};
  j["cA_index"] = s.n ? Json(*s.n) : Json(nullptr);
  j["ade"] = s.ade ? Json(s.ade->to_string()) : Json(nullptr);
  j["germ"] = s.germ ? Json(to_string(*s.germ)) : Json(nullptr);
  return j;
}

Json to_json(const QuiverWithRelations& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows) arrows.push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
  Json rels = Json::array();
  for (const auto& [i, j] : q.relations) rels.push_back({q.arrows[i].name, q.arrows[j].name});
  return {{"vertices", q.vertices}, {"arrows", arrows}, {"relations", rels}};
}

Json to_json(const QuiverWithRelations& q, const AlgebraBasis& b) {
  Json j = to_json(q);
  Json paths = Json::array();
  for (const auto& p : b.paths) paths.push_back(path_name(q, p));
  j["basis"] = paths;
  j["dimension"] = b.dimension();
  return j;
}

Json to_json(const Certificate& c) {
  Json quivers = Json::array();
  for (std::size_t i = 0; i < c.quivers.size(); ++i) {
    Json q = to_json(c.quivers[i]);
    q["dimension"] = c.algebra_dimensions[i];
    quivers.push_back(q);
  }
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(to_json(p));
  return {{"kind", to_string(c.kind)}, {"quivers", quivers}, {"algebra_orders", c.algebra_orders}, {"parts", parts}};
}

Json to_json(const Verdict& v) {
  Json j = {{"decision", decision_text(v.decision)}, {"notes", v.notes}};
  j["obstruction"] = v.obstruction ? to_json(*v.obstruction) : Json(nullptr);
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  j["k_minus_one"] = v.k_minus_one ? to_json(*v.k_minus_one) : Json(nullptr);
  return j;
}

Json to_json(const GlobalReport& r) {
  Json j = {{"L", r.L},
            {"defect", r.delta},
            {"k_minus_one", to_json(r.k_minus_one)},
            {"enough_weil_divisors", to_string(r.enough_weil)},
            {"nodal", r.nodal}};
  j["maximally_nonfactorial"] = r.nodal ? Json(r.maximally_nonfactorial()) : Json(nullptr);
  return j;
}

Json to_json(const SurfaceReport& r) {
  return {{"rank", r.rank}, {"k_minus_one", to_json(r.k_minus_one)}, {"exact", r.exact}};
}

Json to_json(const BlowupReport& r) {
  Json sings = Json::array();
  for (const auto& s : r.singularities) sings.push_back(to_json(s));
  return {{"k_minus_one", to_json(r.k_minus_one)}, {"singularities", sings}, {"verdict", to_json(r.verdict)}};
}

Json to_json(const SmithForm& f) {
  Json diag = Json::array();
  for (const auto& d : f.diagonal()) diag.push_back(to_json(d));
  return {{"d", to_json(f.d)}, {"u", to_json(f.u)}, {"v", to_json(f.v)}, {"diagonal", diag}};
}

Json to_json(const DelPezzoRow& r) {
  return {{"d", r.d},           {"singular_points", r.nodes}, {"pic_rank", r.pic_rank},
          {"cl_rank", r.cl_rank}, {"k_minus_one_rank", r.k_rank}, {"kawamata", decision_text(r.verdict)}};
}

Json to_json(const AdeRow& r) {
  Json j = {{"type", r.type},   {"label", r.label.to_string()},     {"equation", "xy + " + to_string(r.germ)},
            {"branches", r.br}, {"cl", FinAbGroup::free(r.cl_rank).to_string()}, {"cl_rank", r.cl_rank}};
  j["k"] = r.k ? Json(*r.k) : Json(nullptr);
  return j;
}

std::string render_text(const BranchReport& r, const std::vector<NewtonEdge>& edges) {
  std::ostringstream os;
  os << "order: " << r.order << "\n"
     << "cA index: " << r.cAn_index << "\n"
     << "branches: " << r.branch_count << "\n"
     << "local Cl rank: " << r.branch_count - 1 << "\n";
  for (const auto& e : edges) {
    os << "newton edge: (" << e.start.first << "," << e.start.second << ")-(" << e.end.first << "," << e.end.second
       << "), edge polynomial " << to_string(e.edge_polynomial) << "\n";
  }
  return os.str();
}

std::string render_text(const LocalSingularity& s) {
  std::ostringstream os;
  if (s.ade) os << "type: " << s.ade->to_string() << "\n";
  if (s.germ) os << "equation: xy + " << to_string(*s.germ) << "\n";
  if (s.n) os << "cA index: " << *s.n << "\n";
  os << "branches: " << s.br << "\n"
     << "local Cl: " << FinAbGroup::free(s.cl_rank).to_string() << "\n"
     << "node: " << (s.node ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_text(const QuiverWithRelations& q, const AlgebraBasis& b) {
  std::ostringstream os;
  os << q.to_string() << "dimension: " << b.dimension() << "\n"
     << "basis:";
  for (const auto& p : b.paths) os << " " << (p.arrows.size() > 1 ? "(" + path_name(q, p) + ")" : path_name(q, p));
  os << "\n";
  return os.str();
}

std::string render_text(const Verdict& v) {
  std::ostringstream os;
  os << "verdict: " << decision_text(v.decision) << "\n";
  if (v.obstruction) {
    os << "OBSTRUCTED: rk K_-1 = " << v.obstruction->free_rank() << "\n";
    os << "obstruction: K_-1 = " << v.obstruction->to_string() << "\n";
  } else if (v.k_minus_one) {
    os << "K_-1: " << v.k_minus_one->to_string() << "\n";
  }
  if (v.certificate) os << certificate_text(*v.certificate, "");
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string render_text(const GlobalReport& r) {
  std::ostringstream os;
  os << "L: " << r.L << "\n"
     << "defect: " << r.delta << "\n"
     << "K_-1: " << r.k_minus_one.to_string() << "\n"
     << "rk K_-1: " << r.k_minus_one.free_rank() << "\n"
     << "enough Weil divisors: " << to_string(r.enough_weil) << "\n";
  if (r.nodal) os << "maximally nonfactorial: " << (r.maximally_nonfactorial() ? "yes" : to_string(r.enough_weil)) << "\n";
  return os.str();
}

std::string render_text(const SurfaceReport& r) {
  std::ostringstream os;
  os << "rk K_-1: " << r.rank << "\n"
     << "K_-1: " << r.k_minus_one.to_string() << (r.exact ? "" : " (rank only)") << "\n";
  return os.str();
}

std::string render_text(const BlowupReport& r) {
  std::ostringstream os;
  os << "K_-1: " << r.k_minus_one.to_string() << "\n"
     << "singular points: " << r.singularities.size() << "\n";
  for (const auto& s : r.singularities) os << "  " << s.describe() << ", br " << s.br << "\n";
  os << render_text(r.verdict);
  return os.str();
}

std::string render_text(const SmithForm& f, const FinAbGroup& coker) {
  std::ostringstream os;
  os << "D = " << f.d.to_string() << "\n"
     << "U = " << f.u.to_string() << "\n"
     << "V = " << f.v.to_string() << "\n"
     << "cokernel: " << coker.to_string() << "\n";
  return os.str();
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += " | ";
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

std::string render_del_pezzo_table(const std::vector<DelPezzoRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"d", "|Sing|", "rk Pic", "rk Cl", "rk K_-1", "Kawamata decomp."}};
  for (const auto& r : rows) {
    cells.push_back({std::to_string(r.d), std::to_string(r.nodes), std::to_string(r.pic_rank),
                     std::to_string(r.cl_rank), std::to_string(r.k_rank), decision_text(r.verdict)});
  }
  return format_table(cells);
}

std::string render_ade_table(const std::vector<AdeRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"type", "k", "label", "equation", "Cl", "br"}};
  for (const auto& r : rows) {
    cells.push_back({r.type, r.k ? std::to_string(*r.k) : "-", r.label.to_string(), "xy + " + to_string(r.germ),
                     FinAbGroup::free(r.cl_rank).to_string(), std::to_string(r.br)});
  }
  return format_table(cells);
}

}  // namespace ksod
