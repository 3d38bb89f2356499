// Text and JSON renderings of every result type. JSON objects use sorted
// keys, so dumps are byte-stable.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "ksod/blowup.hpp"
#include "ksod/germ.hpp"
#include "ksod/global.hpp"
#include "ksod/local.hpp"
#include "ksod/matrix.hpp"
#include "ksod/quiver.hpp"
#include "ksod/verdict.hpp"

namespace ksod {

using Json = nlohmann::json;

Json to_json(const Integer& x);  // number when it fits in 64 bits, else string
Json to_json(const FinAbGroup& g);
Json to_json(const IntMatrix& m);
Json to_json(const NewtonEdge& e);
Json to_json(const BranchReport& r);
Json to_json(const LocalSingularity& s);
Json to_json(const QuiverWithRelations& q);
Json to_json(const QuiverWithRelations& q, const AlgebraBasis& b);
Json to_json(const Certificate& c);
Json to_json(const Verdict& v);
Json to_json(const GlobalReport& r);
Json to_json(const SurfaceReport& r);
Json to_json(const BlowupReport& r);
Json to_json(const SmithForm& f);
Json to_json(const DelPezzoRow& r);
Json to_json(const AdeRow& r);

std::string render_text(const BranchReport& r, const std::vector<NewtonEdge>& edges);
std::string render_text(const LocalSingularity& s);
std::string render_text(const QuiverWithRelations& q, const AlgebraBasis& b);
std::string render_text(const Verdict& v);
std::string render_text(const GlobalReport& r);
std::string render_text(const SurfaceReport& r);
std::string render_text(const BlowupReport& r);
std::string render_text(const SmithForm& f, const FinAbGroup& coker);
std::string render_del_pezzo_table(const std::vector<DelPezzoRow>& rows);
std::string render_ade_table(const std::vector<AdeRow>& rows);

// Pads columns of a '|'-separated table to equal width.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace ksod
