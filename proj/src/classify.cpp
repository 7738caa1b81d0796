#include "dfone/classify.hpp"

#include <cmath>

#include "dfone/forall.hpp"
#include "dfone/transship.hpp"

namespace dfone {

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::AlwaysNonempty:
      return "AlwaysNonempty";
    case Verdict::DependsOnKappa:
      return "DependsOnKappa";
    case Verdict::AlwaysEmpty:
      return "AlwaysEmpty";
  }
  return "?";
}

Classification classify_deficiency_one(const DiGraph& graph, const RationalVector& h) {
  Classification out;
  const AbsorbingSplit split = split_absorbing(graph);
  if (split.c_double.empty()) {
    out.verdict = Verdict::AlwaysNonempty;
    out.notes.push_back("strongly connected: nonempty for every choice of rates");
    return out;
  }
  const ExistsCondition exists = exists_kappa_condition(graph, h);
  const ForallCondition forall = forall_condition(graph, h);
  out.exists_conditions = exists.conditions;
  out.forall_conditions = forall.conditions;
  if (!exists.holds) {
    out.verdict = Verdict::AlwaysEmpty;
    return out;
  }
  if (forall.holds) {
    out.verdict = Verdict::AlwaysNonempty;
    return out;
  }
  out.verdict = Verdict::DependsOnKappa;
  out.witness_kappa = exists.witness_kappa;
  out.falsifier_kappa = falsify_kappa(graph, h);
  if (!out.falsifier_kappa) out.notes.push_back("falsifier search exhausted its budget");
  return out;
}

Analysis analyze(const Instance& instance) {
  Analysis a;
  if (const auto* net = std::get_if<ReactionNetwork>(&instance)) {
    a.mode = InputMode::Network;
    a.graph = net->graph();
    a.species_count = net->species_count();
    a.components = analyze_components(a.graph);
    a.deficiency = compute_deficiency(*net);
    a.split = split_absorbing(a.graph);
    if (a.deficiency.delta >= 2)
      throw UnsupportedNetwork("out of scope: deficiency " + std::to_string(a.deficiency.delta));
    if (a.deficiency.delta == 0) {
      const bool strong = a.components.strongly_connected();
      a.classification.verdict = strong ? Verdict::AlwaysNonempty : Verdict::AlwaysEmpty;
      a.classification.notes.push_back(strong ? "deficiency zero, strongly connected"
                                              : "deficiency zero, not strongly connected");
      return a;
    }
    if (a.components.strongly_connected()) {
      a.classification.verdict = Verdict::AlwaysNonempty;
      a.classification.notes.push_back("deficiency one, strongly connected");
      return a;
    }
    const HVector h = compute_h(*net);
    a.h = h.values;
    a.classification = classify_deficiency_one(a.graph, *a.h);
    a.classification.notes.insert(a.classification.notes.begin(), "h: " + h.sign_note);
    return a;
  }

  const auto& gh = std::get<GraphHInstance>(instance);
  a.mode = InputMode::GraphH;
  a.graph = gh.graph;
  a.components = analyze_components(a.graph);
  a.split = split_absorbing(a.graph);
  a.deficiency = {1, a.components.weak_count, a.components.terminal_count()};
  a.deficiency_assumed = true;
  RationalVector h = gh.h;
  if (!a.split.c_double.empty() && sum_over(h, a.split.c_double) > 0) {
    for (auto& q : h) q = -q;
    a.classification.notes.push_back("h negated so that h(C'') <= 0");
  }
  a.h = h;
  auto notes = std::move(a.classification.notes);
  a.classification = classify_deficiency_one(a.graph, h);
  a.classification.notes.insert(a.classification.notes.begin(), notes.begin(), notes.end());
  return a;
}

ArcValues sample_rates(const DiGraph& graph, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> exponent(-3.0, 3.0);
  ArcValues out;
  out.reserve(graph.arc_count());
  for (std::size_t k = 0; k < graph.arc_count(); ++k) out.push_back(from_double(std::pow(10.0, exponent(rng))));
  return out;
}

OracleReport sampling_oracle(const Analysis& analysis, int samples, std::uint64_t seed) {
  OracleReport r;
  r.seed = seed;
  if (!analysis.h || analysis.split.c_double.empty()) return r;
  r.applicable = true;
  r.samples = samples;
  const auto& c = analysis.classification;
  const RationalVector& h = *analysis.h;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s)
    if (exists_for_kappa(analysis.graph, sample_rates(analysis.graph, rng), h)) ++r.positive;

  if (c.witness_kappa) r.witness_verified = exists_for_kappa(analysis.graph, *c.witness_kappa, h);
  if (c.falsifier_kappa) r.falsifier_verified = !exists_for_kappa(analysis.graph, *c.falsifier_kappa, h);

  switch (c.verdict) {
    case Verdict::AlwaysNonempty:
      if (r.positive != samples) r.problems.push_back(std::to_string(samples - r.positive) + " samples without steady states");
      break;
    case Verdict::AlwaysEmpty:
      if (r.positive != 0) r.problems.push_back(std::to_string(r.positive) + " samples with steady states");
      break;
    case Verdict::DependsOnKappa:
      if (!r.witness_verified) r.problems.push_back("witness rates do not give steady states");
      if (c.falsifier_kappa && !r.falsifier_verified) r.problems.push_back("falsifier rates give steady states");
      break;
  }
  r.consistent = r.problems.empty();
  return r;
}

}  // namespace dfone
