#include "ksod/spec_io.hpp"

#include <json.hpp>
#include <set>

#include "ksod/error.hpp"
#include "ksod/parse.hpp"

namespace ksod {

namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxCount = 100000;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::SchemaError, path + ": " + msg);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t limit = e.byte == 0 ? 0 : e.byte - 1;
    for (std::size_t i = 0; i < limit && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (const auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    throw ParseError(line, col, "invalid JSON (" + what + ")");
  }
}

// Typed accessors that remember where they are in the document.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const json& raw() const { return j_; }

  const Node& require_object(std::initializer_list<const char*> allowed) const {
    if (!j_.is_object()) schema_error(path_, "expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j_.items()) {
      if (!ok.count(key)) schema_error(path_ + "." + key, "unknown field");
    }
    return *this;
  }

  bool has(const char* key) const { return j_.contains(key); }
  bool is_string() const { return j_.is_string(); }

  Node at(const char* key) const {
    if (!j_.contains(key)) schema_error(path_ + "." + key, "missing required field");
    return Node(j_.at(key), path_ + "." + key);
  }

  Node at(std::size_t i) const { return Node(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }

  std::size_t array_size() const {
    if (!j_.is_array()) schema_error(path_, "expected an array");
    return j_.size();
  }

  std::uint64_t as_nat(std::uint64_t max = kMaxCount) const {
    if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<std::int64_t>() >= 0)) {
      schema_error(path_, "expected a non-negative integer");
    }
    const auto v = j_.get<std::uint64_t>();
    if (v > max) schema_error(path_, "value " + std::to_string(v) + " exceeds the limit " + std::to_string(max));
    return v;
  }

  Integer as_integer() const {
    if (j_.is_number_integer()) return Integer(std::to_string(j_.get<std::int64_t>()));
    if (j_.is_number_unsigned()) return Integer(std::to_string(j_.get<std::uint64_t>()));
    if (j_.is_string()) {
      const auto s = j_.get<std::string>();
      const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
      const bool digits = s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
      if (digits) return Integer(s);
    }
    schema_error(path_, "expected an integer");
  }

  bool as_bool() const {
    if (!j_.is_boolean()) schema_error(path_, "expected true or false");
    return j_.get<bool>();
  }

  std::string as_string() const {
    if (!j_.is_string()) schema_error(path_, "expected a string");
    return j_.get<std::string>();
  }

  BiPoly as_polynomial() const {
    try {
      return parse_polynomial(as_string());
    } catch (const ParseError& e) {
      schema_error(path_, e.what());
    }
  }

 private:
  const json& j_;
  std::string path_;
};

std::vector<bool> bool_list(const Node& n) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < n.array_size(); ++i) out.push_back(n.at(i).as_bool());
  return out;
}

IntMatrix read_matrix(const Node& n) {
  const std::size_t rows = n.array_size();
  std::size_t cols = 0;
  std::vector<Integer> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const Node row = n.at(i);
    const std::size_t c = row.array_size();
    if (i == 0) {
      cols = c;
    } else if (c != cols) {
      schema_error(row.path(), "row has " + std::to_string(c) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < c; ++j) entries.push_back(row.at(j).as_integer());
  }
  return IntMatrix(rows, cols, std::move(entries));
}

DualGraph read_graph(const Node& n) {
  n.require_object({"vertices", "edges", "rational", "smooth_p1"});
  DualGraph g;
  g.vertex_count = static_cast<unsigned>(n.at("vertices").as_nat());
  if (n.has("edges")) {
    const Node edges = n.at("edges");
    for (std::size_t i = 0; i < edges.array_size(); ++i) {
      const Node e = edges.at(i);
      if (e.array_size() != 2) schema_error(e.path(), "an edge is a pair [u, v]");
      const auto u = static_cast<unsigned>(e.at(std::size_t{0}).as_nat());
      const auto v = static_cast<unsigned>(e.at(std::size_t{1}).as_nat());
      if (u >= g.vertex_count || v >= g.vertex_count) {
        schema_error(e.path(), g.vertex_count == 0 ? std::string("graph has no vertices")
                                                   : "endpoint out of range 0.." + std::to_string(g.vertex_count - 1));
      }
      g.edges.emplace_back(u, v);
    }
  }
  if (n.has("rational")) {
    g.rational = bool_list(n.at("rational"));
    if (g.rational.size() != g.vertex_count) schema_error(n.path() + ".rational", "need one flag per vertex");
  }
  if (n.has("smooth_p1")) {
    g.smooth_p1 = bool_list(n.at("smooth_p1"));
    if (g.smooth_p1.size() != g.vertex_count) schema_error(n.path() + ".smooth_p1", "need one flag per vertex");
  }
  try {
    g.validate();
  } catch (const Error& e) {
    schema_error(n.path(), e.what());
  }
  return g;
}

std::vector<LocalSingularity> read_singularity(const Node& n) {
  n.require_object({"ade", "germ", "factors", "branches", "count"});
  const int forms = int(n.has("ade")) + int(n.has("germ")) + int(n.has("factors")) + int(n.has("branches"));
  if (forms != 1) schema_error(n.path(), "exactly one of \"ade\", \"germ\", \"factors\", \"branches\" is required");
  const std::size_t count = n.has("count") ? n.at("count").as_nat() : 1;

  LocalSingularity s;
  if (n.has("ade")) {
    const Node a = n.at("ade");
    try {
      if (a.is_string()) {
        const auto label = parse_ade_label(a.as_string());
        if (!label) schema_error(a.path(), "expected an ADE label such as \"D4\"");
        s = ade_lookup(label->family, label->index);
      } else {
        if (a.array_size() != 2) schema_error(a.path(), "expected \"D4\" or [family, index]");
        s = ade_lookup(parse_ade_family(a.at(std::size_t{0}).as_string()),
                       static_cast<unsigned>(a.at(std::size_t{1}).as_nat()));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SchemaError) throw;
      schema_error(a.path(), e.what());
    }
  } else if (n.has("germ")) {
    s = classify_cAn(n.at("germ").as_polynomial());
  } else if (n.has("factors")) {
    const Node f = n.at("factors");
    std::vector<BiPoly> factors;
    for (std::size_t i = 0; i < f.array_size(); ++i) factors.push_back(f.at(i).as_polynomial());
    s = classify_cAn_factored(factors);
  } else {
    const Node b = n.at("branches");
    const auto br = b.as_nat();
    if (br == 0) schema_error(b.path(), "branch number must be at least 1");
    s = from_branches(static_cast<unsigned>(br));
  }
  if (s.n && *s.n == 0) schema_error(n.path(), "germ of order 1 is a smooth point, not a singularity");
  return std::vector<LocalSingularity>(count, s);
}

void read_threefold(const Node& root, SpecDocument& doc) {
  root.require_object({"kind", "label", "singularities", "pic_rank", "cl_rank", "defect", "restriction_matrix", "fano"});
  VarietySpec& v = doc.threefold;
  if (!doc.label.empty() && !root.has("pic_rank") && !root.has("singularities")) {
    if (auto stored = catalog_threefold(doc.label)) {
      for (const char* key : {"cl_rank", "defect", "fano"}) {
        if (root.has(key)) schema_error(root.path() + "." + key, "catalog label given without pic_rank");
      }
      v = *stored;
      if (root.has("restriction_matrix")) v.restriction_matrix = read_matrix(root.at("restriction_matrix"));
      return;
    }
  }
  v.dimension = 3;
  v.label = doc.label;
  if (root.has("singularities")) {
    const Node sings = root.at("singularities");
    for (std::size_t i = 0; i < sings.array_size(); ++i) {
      for (auto& s : read_singularity(sings.at(i))) v.singularities.push_back(std::move(s));
    }
  }
  v.pic_rank = static_cast<unsigned>(root.at("pic_rank").as_nat());
  if (root.has("cl_rank") == root.has("defect")) schema_error(root.path(), "give exactly one of \"cl_rank\" and \"defect\"");
  v.cl_rank = root.has("cl_rank") ? static_cast<unsigned>(root.at("cl_rank").as_nat())
                                  : v.pic_rank + static_cast<unsigned>(root.at("defect").as_nat());
  if (v.cl_rank < v.pic_rank) schema_error(root.path() + ".cl_rank", "must be at least pic_rank");
  if (root.has("restriction_matrix")) v.restriction_matrix = read_matrix(root.at("restriction_matrix"));
  if (root.has("fano")) v.fano = root.at("fano").as_bool();
}

void read_curve(const Node& root, SpecDocument& doc) {
  root.require_object({"kind", "label", "graph", "pieces"});
  if (root.has("graph") == root.has("pieces")) schema_error(root.path(), "give exactly one of \"graph\" and \"pieces\"");
  if (root.has("graph")) {
    doc.curve.data = read_graph(root.at("graph"));
    return;
  }
  std::vector<CurvePiece> pieces;
  const Node ps = root.at("pieces");
  if (ps.array_size() == 0) schema_error(ps.path(), "at least one piece is required");
  for (std::size_t i = 0; i < ps.array_size(); ++i) {
    const Node p = ps.at(i);
    p.require_object({"components", "singular_points"});
    CurvePiece piece;
    piece.components = static_cast<unsigned>(p.at("components").as_nat());
    if (piece.components == 0) schema_error(p.path() + ".components", "must be at least 1");
    if (p.has("singular_points")) {
      const Node sp = p.at("singular_points");
      for (std::size_t j = 0; j < sp.array_size(); ++j) {
        const auto br = sp.at(j).as_nat();
        if (br == 0) schema_error(sp.at(j).path(), "branch number must be at least 1");
        piece.branches.push_back(static_cast<unsigned>(br));
      }
    }
    pieces.push_back(std::move(piece));
  }
  doc.curve.data = std::move(pieces);
}

void read_surface(const Node& root, SpecDocument& doc) {
  root.require_object({"kind", "label", "pic_rank", "resolution_pic_rank", "exceptional_curves", "restriction_matrix",
                       "toric", "cyclic_orders"});
  SurfaceSpec& s = doc.surface;
  s.label = doc.label;
  s.rho_X = static_cast<unsigned>(root.at("pic_rank").as_nat());
  s.rho_resolution = static_cast<unsigned>(root.at("resolution_pic_rank").as_nat());
  s.n_exceptional = static_cast<unsigned>(root.at("exceptional_curves").as_nat());
  if (root.has("restriction_matrix")) s.restriction_matrix = read_matrix(root.at("restriction_matrix"));
  if (root.has("toric")) s.toric = root.at("toric").as_bool();
  if (root.has("cyclic_orders")) {
    const Node c = root.at("cyclic_orders");
    for (std::size_t i = 0; i < c.array_size(); ++i) s.cyclic_orders.push_back(static_cast<unsigned>(c.at(i).as_nat()));
  }
}

void read_blowup(const Node& root, SpecDocument& doc) {
  root.require_object({"kind", "label", "steps"});
  const Node steps = root.at("steps");
  for (std::size_t i = 0; i < steps.array_size(); ++i) {
    const Node st = steps.at(i);
    if (!st.raw().is_object()) schema_error(st.path(), "expected an object");
    const std::string center = st.at("center").as_string();
    BlowupCenter c;
    if (center == "point") {
      st.require_object({"center"});
      c.kind = BlowupCenter::Kind::Point;
    } else if (center == "nodal_curve") {
      st.require_object({"center", "graph"});
      c.kind = BlowupCenter::Kind::NodalCurve;
      c.graph = read_graph(st.at("graph"));
    } else if (center == "curve") {
      st.require_object({"center", "components", "germs"});
      c.kind = BlowupCenter::Kind::Curve;
      c.components = static_cast<unsigned>(st.at("components").as_nat());
      if (c.components == 0) schema_error(st.path() + ".components", "must be at least 1");
      if (st.has("germs")) {
        const Node g = st.at("germs");
        for (std::size_t j = 0; j < g.array_size(); ++j) c.germs.push_back(g.at(j).as_polynomial());
      }
    } else {
      schema_error(st.path() + ".center", "expected \"point\", \"nodal_curve\" or \"curve\"");
    }
    doc.blowup.steps.push_back(std::move(c));
  }
}

void read_quiver(const Node& root, SpecDocument& doc) {
  root.require_object({"kind", "label", "graph", "length_bound"});
  doc.graph = read_graph(root.at("graph"));
  if (root.has("length_bound")) doc.length_bound = root.at("length_bound").as_nat();
}

}  // namespace

std::string to_string(SpecKind k) {
  switch (k) {
    case SpecKind::Curve: return "curve";
    case SpecKind::Threefold: return "threefold";
    case SpecKind::Surface: return "surface";
    case SpecKind::Blowup: return "blowup";
    case SpecKind::Quiver: return "quiver";
  }
  return {};
}

SpecDocument parse_spec_document(std::string_view json_text, std::optional<SpecKind> default_kind) {
  const json j = parse_json(json_text);
  const Node root(j, "$");
  if (!j.is_object()) schema_error("$", "expected an object");
  const std::string kind =
      root.has("kind") || !default_kind ? root.at("kind").as_string() : to_string(*default_kind);
  SpecDocument doc;
  if (root.has("label")) doc.label = root.at("label").as_string();
  if (kind == "curve") {
    doc.kind = SpecKind::Curve;
    read_curve(root, doc);
  } else if (kind == "threefold") {
    doc.kind = SpecKind::Threefold;
    read_threefold(root, doc);
  } else if (kind == "surface") {
    doc.kind = SpecKind::Surface;
    read_surface(root, doc);
  } else if (kind == "blowup") {
    doc.kind = SpecKind::Blowup;
    read_blowup(root, doc);
  } else if (kind == "quiver") {
    doc.kind = SpecKind::Quiver;
    read_quiver(root, doc);
  } else {
    schema_error("$.kind", "expected one of \"curve\", \"threefold\", \"surface\", \"blowup\", \"quiver\"");
  }
  return doc;
}

IntMatrix parse_matrix_json(std::string_view json_text) {
  const json j = parse_json(json_text);
  return read_matrix(Node(j, "$"));
}

}  // namespace ksod
