// JSON specification documents. Every document has a top-level "kind":
//
//   curve:     {"graph": GRAPH} or {"pieces": [{"components": N, "singular_points": [br, ...]}]}
//   threefold: {"singularities": [SING], "pic_rank": n, "cl_rank": n | "defect": n,
//               "restriction_matrix"?: [[int]], "fano"?: bool}
//   surface:   {"pic_rank": n, "resolution_pic_rank": n, "exceptional_curves": n,
//               "restriction_matrix"?: [[int]], "toric"?: bool, "cyclic_orders"?: [n]}
//   blowup:    {"steps": [{"center": "point"} | {"center": "nodal_curve", "graph": GRAPH}
//                        | {"center": "curve", "components": N, "germs": [expr]}]}
//   quiver:    {"graph": GRAPH, "length_bound"?: n}
//
//   GRAPH: {"vertices": n, "edges": [[u, v]], "rational"?: [bool], "smooth_p1"?: [bool]}
//   SING:  {"ade": "D4" | ["D", 4]} | {"germ": expr} | {"factors": [expr]} | {"branches": n},
//          each with an optional "count"
//
// All kinds accept an optional "label". Unknown fields are rejected.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ksod/blowup.hpp"
#include "ksod/curve.hpp"
#include "ksod/global.hpp"
#include "ksod/matrix.hpp"
#include "ksod/verdict.hpp"

namespace ksod {

enum class SpecKind { Curve, Threefold, Surface, Blowup, Quiver };

std::string to_string(SpecKind k);

struct SpecDocument {
  SpecKind kind = SpecKind::Curve;
  std::string label;
  CurveSpec curve;
  VarietySpec threefold;
  SurfaceSpec surface;
  BlowupPipeline blowup;
  DualGraph graph;              // quiver
  std::size_t length_bound = 0;  // quiver; 0 = vertex count
};

// Throws ParseError for malformed JSON and SchemaError (message starting
// with the offending "$.path") for schema violations. A missing "kind"
// falls back to `default_kind` when given. A threefold consisting of a
// catalog label alone expands to the stored invariants.
SpecDocument parse_spec_document(std::string_view json_text, std::optional<SpecKind> default_kind = std::nullopt);

// A JSON array of equal-length integer arrays. Integers beyond 64 bits may
// be written as strings.
IntMatrix parse_matrix_json(std::string_view json_text);

}  // namespace ksod
