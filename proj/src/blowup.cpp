#include "ksod/blowup.hpp"

#include <optional>

#include "ksod/error.hpp"
#include "ksod/germ.hpp"

namespace ksod {

FinAbGroup blowup_k_theory(const FinAbGroup& base, const FinAbGroup& center, unsigned codim) {
  if (codim < 2) throw Error(ErrorKind::InvalidInput, "blow-up centers have codimension at least 2");
  return direct_sum(base, center.power(codim - 1));
}

std::vector<LocalSingularity> blowup_singularities(std::span<const BiPoly> center_germs) {
  std::vector<LocalSingularity> out;
  for (const auto& f : center_germs) {
    if (!is_isolated(f)) {
      throw Error(ErrorKind::NotIsolated, "center germ " + to_string(f) +
                                              " is not an isolated plane curve singularity");
    }
    if (order_at_origin(f) == 1) continue;
    out.push_back(classify_cAn(f));
  }
  return out;
}

Verdict blowup_curve_verdict(const DualGraph& curve) {
  BlowupPipeline p;
  BlowupCenter c;
  c.kind = BlowupCenter::Kind::NodalCurve;
  c.graph = curve;
  p.steps.push_back(std::move(c));
  return decide(p);
}

namespace {

struct StepResult {
  unsigned codim = 2;
  FinAbGroup k_minus_one;
  Decision decision = Decision::Unknown;
  std::optional<Certificate> certificate;
  std::vector<LocalSingularity> singularities;
};

StepResult blow_up_step(const BlowupCenter& step) {
  StepResult r;
  switch (step.kind) {
    case BlowupCenter::Kind::Point:
      r.codim = 3;
      r.decision = Decision::Yes;
      r.certificate = Certificate{CertificateKind::SmoothTrivial, {}, {}, {}, {}};
      return r;
    case BlowupCenter::Kind::NodalCurve: {
      const std::vector<BiPoly> germs(step.graph.edges.size(), BiPoly::z() * BiPoly::w());
      r.singularities = blowup_singularities(germs);
      const Verdict v = decide(CurveSpec{step.graph});
      r.k_minus_one = curve_k_minus_one(CurveSpec{step.graph});
      r.decision = v.decision;
      r.certificate = v.certificate;
      return r;
    }
    case BlowupCenter::Kind::Curve: {
      CurvePiece piece;
      piece.components = step.components;
      r.singularities = blowup_singularities(step.germs);
      for (const auto& s : r.singularities) piece.branches.push_back(s.br);
      const CurveSpec curve{std::vector<CurvePiece>{piece}};
      const Verdict v = decide(curve);
      r.k_minus_one = curve_k_minus_one(curve);
      r.decision = v.decision;
      r.certificate = v.certificate;
      return r;
    }
  }
  return r;
}

}  // namespace

BlowupReport run_pipeline(const BlowupPipeline& pipeline) {
  BlowupReport report;
  Certificate yes{CertificateKind::BlowupOfYesPair, {}, {}, {}, {}};
  yes.parts.push_back({CertificateKind::SmoothTrivial, {}, {}, {}, {}});
  bool all_yes = true;

  for (const auto& step : pipeline.steps) {
    StepResult r = blow_up_step(step);
    report.k_minus_one = blowup_k_theory(report.k_minus_one, r.k_minus_one, r.codim);
    for (auto& s : r.singularities) report.singularities.push_back(std::move(s));
    if (r.decision == Decision::Yes) {
      yes.parts.push_back(std::move(*r.certificate));
    } else {
      all_yes = false;
    }
  }

  Verdict& v = report.verdict;
  v.k_minus_one = report.k_minus_one;
  if (!report.k_minus_one.is_trivial()) {
    v.decision = Decision::No;
    v.obstruction = report.k_minus_one;
  } else if (all_yes) {
    v.decision = Decision::Yes;
    v.certificate = std::move(yes);
  } else {
    v.notes.push_back("K_-1 vanishes but some center has no certified decomposition");
  }
  return report;
}

Verdict decide(const BlowupPipeline& pipeline) { return run_pipeline(pipeline).verdict; }

}  // namespace ksod
