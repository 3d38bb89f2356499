#include "ksod/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "ksod/blowup.hpp"
#include "ksod/error.hpp"
#include "ksod/germ.hpp"
#include "ksod/global.hpp"
#include "ksod/local.hpp"
#include "ksod/parse.hpp"
#include "ksod/quiver.hpp"
#include "ksod/report.hpp"
#include "ksod/spec_io.hpp"
#include "ksod/verdict.hpp"

namespace ksod {

namespace {

struct Options {
  bool json = false;
  std::string input;
  std::string factors;
  std::string matrix;
  std::string k_range = "1..3";
};

// A file path, "-" for standard input, or an inline JSON document.
std::string load_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ostringstream buf;
  if (arg == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + arg + "'");
  buf << in.rdbuf();
  return buf.str();
}

SpecDocument load_spec(const Options& o, std::initializer_list<SpecKind> accepted) {
  if (o.input.empty()) throw Error(ErrorKind::InvalidInput, "missing specification argument");
  std::optional<SpecKind> fallback;
  if (accepted.size() <= 2) fallback = *accepted.begin();
  SpecDocument doc = parse_spec_document(load_text(o.input), fallback);
  bool ok = false;
  std::string names;
  for (SpecKind k : accepted) {
    ok = ok || k == doc.kind;
    names += (names.empty() ? "\"" : " or \"") + to_string(k) + "\"";
  }
  if (!ok) throw Error(ErrorKind::SchemaError, "$.kind: expected " + names + ", got \"" + to_string(doc.kind) + "\"");
  if (!o.matrix.empty()) {
    IntMatrix m = parse_matrix_json(load_text(o.matrix));
    if (doc.kind == SpecKind::Threefold) {
      doc.threefold.restriction_matrix = std::move(m);
    } else if (doc.kind == SpecKind::Surface) {
      doc.surface.restriction_matrix = std::move(m);
    } else {
      throw Error(ErrorKind::InvalidInput, "--matrix applies to threefold and surface specifications only");
    }
  }
  return doc;
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

std::pair<unsigned, unsigned> parse_k_range(const std::string& s) {
  static const std::regex re(R"(\s*(\d{1,4})\s*(?:\.\.\s*(\d{1,4}))?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(ErrorKind::InvalidInput, "--k expects N or A..B, got '" + s + "'");
  const auto lo = static_cast<unsigned>(std::stoul(m[1]));
  const auto hi = m[2].matched ? static_cast<unsigned>(std::stoul(m[2])) : lo;
  return {lo, hi};
}

// Germ from the positional expression and/or --factors.
struct GermInput {
  BiPoly g;
  std::vector<BiPoly> factors;
};

GermInput read_germ(const Options& o) {
  GermInput in;
  if (!o.factors.empty()) {
    in.factors = parse_polynomial_list(o.factors);
    in.g = BiPoly::constant(Rational(1));
    for (const auto& f : in.factors) in.g = in.g * f;
    if (!o.input.empty() && !(parse_polynomial(o.input) == in.g)) {
      throw Error(ErrorKind::InvalidInput, "the product of --factors is " + to_string(in.g) +
                                               ", which differs from the germ " + o.input);
    }
    return in;
  }
  if (o.input.empty()) throw Error(ErrorKind::InvalidInput, "missing germ expression (or --factors)");
  in.g = parse_polynomial(o.input);
  return in;
}

int cmd_branches(const Options& o, std::ostream& out) {
  const GermInput in = read_germ(o);
  const BranchReport r = in.factors.empty() ? branch_count(in.g) : branch_count_factored(in.factors);
  std::vector<NewtonEdge> edges;
  try {
    edges = newton_polygon(in.g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::MonomialGerm) throw;
  }
  Json j = to_json(r);
  j["germ"] = to_string(in.g);
  j["newton_edges"] = Json::array();
  for (const auto& e : edges) j["newton_edges"].push_back(to_json(e));
  emit(out, o, j, "germ: " + to_string(in.g) + "\n" + render_text(r, edges));
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  LocalSingularity s;
  const auto label = o.factors.empty() ? parse_ade_label(o.input) : std::nullopt;
  if (label) {
    s = ade_lookup(label->family, label->index);
  } else {
    const GermInput in = read_germ(o);
    s = in.factors.empty() ? classify_cAn(in.g) : classify_cAn_factored(in.factors);
  }
  emit(out, o, to_json(s), render_text(s));
  return kExitOk;
}

int cmd_curve(const Options& o, std::ostream& out) {
  const SpecDocument doc = load_spec(o, {SpecKind::Curve});
  const FinAbGroup k = curve_k_minus_one(doc.curve);
  const Verdict v = decide(doc.curve);
  Json j = {{"k_minus_one", to_json(k)}, {"verdict", to_json(v)}};
  std::ostringstream text;
  text << "K_-1: " << k.to_string() << "\n";
  if (const auto* g = std::get_if<DualGraph>(&doc.curve.data)) {
    j["betti1"] = betti1(*g);
    j["tree_of_lines"] = is_tree_of_lines(*g);
    text << "betti1: " << betti1(*g) << "\n"
         << "tree of lines: " << (is_tree_of_lines(*g) ? "yes" : "no") << "\n";
  }
  text << render_text(v);
  emit(out, o, j, text.str());
  return kExitOk;
}

int cmd_quiver(const Options& o, std::ostream& out) {
  const SpecDocument doc = load_spec(o, {SpecKind::Quiver, SpecKind::Curve});
  DualGraph g = doc.graph;
  std::size_t bound = doc.length_bound;
  if (doc.kind == SpecKind::Curve) {
    const auto* graph = std::get_if<DualGraph>(&doc.curve.data);
    if (!graph) throw Error(ErrorKind::SchemaError, "$.graph: a quiver needs a dual graph");
    g = *graph;
  }
  const QuiverWithRelations q = burban_quiver(g);
  const AlgebraBasis b = algebra_basis(q, bound);
  emit(out, o, to_json(q, b), render_text(q, b));
  return kExitOk;
}

int cmd_threefold(const Options& o, std::ostream& out) {
  const SpecDocument doc = load_spec(o, {SpecKind::Threefold});
  const GlobalReport r = threefold_invariants(doc.threefold);
  Json j = to_json(r);
  Json sings = Json::array();
  for (const auto& s : doc.threefold.singularities) sings.push_back(to_json(s));
  j["singularities"] = sings;
  emit(out, o, j, "singular points: " + std::to_string(doc.threefold.singularities.size()) + "\n" + render_text(r));
  return kExitOk;
}

int cmd_surface(const Options& o, std::ostream& out) {
  const SpecDocument doc = load_spec(o, {SpecKind::Surface});
  const SurfaceReport r = surface_invariants(doc.surface);
  emit(out, o, to_json(r), render_text(r));
  return kExitOk;
}

int cmd_blowup(const Options& o, std::ostream& out) {
  const SpecDocument doc = load_spec(o, {SpecKind::Blowup});
  const BlowupReport r = run_pipeline(doc.blowup);
  emit(out, o, to_json(r), render_text(r));
  return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const SpecDocument doc = load_spec(
      o, {SpecKind::Curve, SpecKind::Threefold, SpecKind::Surface, SpecKind::Blowup, SpecKind::Quiver});
  Verdict v;
  switch (doc.kind) {
    case SpecKind::Curve: v = decide(doc.curve); break;
    case SpecKind::Threefold: v = decide(doc.threefold); break;
    case SpecKind::Surface: v = decide(doc.surface); break;
    case SpecKind::Blowup: v = decide(doc.blowup); break;
    case SpecKind::Quiver: v = decide(CurveSpec{doc.graph}); break;
  }
  if (v.certificate) verify_certificate(*v.certificate);
  emit(out, o, to_json(v), render_text(v));
  return kExitOk;
}

int cmd_snf(const Options& o, std::ostream& out) {
  const std::string& src = o.input.empty() ? o.matrix : o.input;
  if (src.empty()) throw Error(ErrorKind::InvalidInput, "missing matrix (inline JSON, file, or --matrix)");
  const IntMatrix m = parse_matrix_json(load_text(src));
  const SmithForm f = smith_normal_form(m);
  const FinAbGroup coker = cokernel(m);
  Json j = to_json(f);
  j["cokernel"] = to_json(coker);
  emit(out, o, j, render_text(f, coker));
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.input == "delpezzo") {
    std::vector<DelPezzoRow> rows;
    for (unsigned d = 1; d <= 6; ++d) rows.push_back(del_pezzo_case(d));
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    emit(out, o, j, render_del_pezzo_table(rows));
    return kExitOk;
  }
  if (o.input == "ade") {
    const auto [lo, hi] = parse_k_range(o.k_range);
    const auto rows = ade_catalog_rows(lo, hi);
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    emit(out, o, j, render_ade_table(rows));
    return kExitOk;
  }
  throw Error(ErrorKind::InvalidInput, "unknown table '" + o.input + "'; expected 'delpezzo' or 'ade'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negative K-theory obstructions to Kawamata type semiorthogonal decompositions", "ksod"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ksod 0.1.0");
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    const char* input_help;
    int (*run)(const Options&, std::ostream&);
  };
  const Sub subs[] = {
      {"branches", "Order, cA index and branch number of a plane curve germ", "germ expression in z, w", cmd_branches},
      {"classify", "Classify the threefold germ xy + g(z, w)", "germ expression or ADE label such as D4",
       cmd_classify},
      {"curve", "K_-1 and verdict for a reduced projective curve", "curve specification", cmd_curve},
      {"quiver", "Burban quiver and algebra basis of a tree of lines", "quiver or curve specification", cmd_quiver},
      {"threefold", "L, defect and K_-1 of a cA_n threefold", "threefold specification", cmd_threefold},
      {"surface", "K_-1 of a rational surface from resolution data", "surface specification", cmd_surface},
      {"blowup", "K_-1 and singularities along a blow-up pipeline", "blow-up specification", cmd_blowup},
      {"decide", "Kawamata decomposition verdict for any specification", "specification", cmd_decide},
      {"snf", "Smith normal form and cokernel of an integer matrix", "matrix as JSON array of arrays", cmd_snf},
      {"table", "Reference tables: delpezzo, ade", "table name", cmd_table},
  };

  const Sub* chosen = nullptr;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", o.input, s.input_help);
    sub->add_flag("--json", o.json, "Machine-readable output");
    if (std::string(s.name) == "branches" || std::string(s.name) == "classify") {
      sub->add_option("--factors", o.factors, "Comma-separated coprime factors of the germ");
    }
    if (std::string(s.name) == "threefold" || std::string(s.name) == "surface" || std::string(s.name) == "decide" ||
        std::string(s.name) == "snf") {
      sub->add_option("--matrix", o.matrix, "Restriction matrix file (JSON array of integer arrays)");
    }
    if (std::string(s.name) == "table") sub->add_option("--k", o.k_range, "ADE parameter range, e.g. 1..3");
    sub->callback([&chosen, &s] { chosen = &s; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return chosen->run(o, out);
  } catch (const Error& e) {
    if (is_unsupported(e.kind())) {
      err << "unsupported: " << e.what() << "\n";
      return kExitUnsupported;
    }
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace ksod
