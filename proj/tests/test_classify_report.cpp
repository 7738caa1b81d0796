#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dfone/classify.hpp"
#include "dfone/report.hpp"
#include "support/random_instances.hpp"
#include "support/worked_examples.hpp"

using namespace dfone;
using namespace dfone::testing;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(DFONE_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Analysis analyze_fixture(const std::string& name) { return analyze(parse_inputs(fixture(name))); }

// Applies a vertex permutation to the graph and h.
std::pair<DiGraph, RationalVector> relabel(const DiGraph& g, const RationalVector& h, const std::vector<Vertex>& perm) {
  std::vector<Arc> arcs;
  for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  RationalVector out(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) out[perm[v]] = h[v];
  return {DiGraph(g.vertex_count(), arcs), out};
}

}  // namespace

TEST_CASE("fixture verdicts") {
  CHECK(analyze_fixture("d8.graph").classification.verdict == Verdict::AlwaysNonempty);
  CHECK(analyze_fixture("t22.graph").classification.verdict == Verdict::AlwaysNonempty);
  CHECK(analyze_fixture("nonempty.net").classification.verdict == Verdict::AlwaysNonempty);
  CHECK(analyze_fixture("reversible.net").classification.verdict == Verdict::AlwaysNonempty);
  CHECK(analyze_fixture("empty.net").classification.verdict == Verdict::AlwaysEmpty);
  CHECK(analyze_fixture("oneway.net").classification.verdict == Verdict::AlwaysEmpty);
  CHECK_THROWS_WITH_AS(analyze_fixture("deficiency_two.net"), doctest::Contains("deficiency 2"), UnsupportedNetwork);

  const auto net1 = analyze_fixture("net1.net");
  CHECK(net1.deficiency.delta == 1);
  CHECK(*net1.h == RationalVector{1, -2, 1});
  const auto& c = net1.classification;
  CHECK(c.verdict == Verdict::DependsOnKappa);
  REQUIRE(c.witness_kappa);
  REQUIRE(c.falsifier_kappa);
  CHECK(exists_for_kappa(net1.graph, *c.witness_kappa, *net1.h));
  CHECK_FALSE(exists_for_kappa(net1.graph, *c.falsifier_kappa, *net1.h));
}

TEST_CASE("the failing strict condition on the eight-complex graph") {
  const DiGraph g = eight_complex();
  const auto c = classify_deficiency_one(g, {2, -2, 0, 0, 0, 0, 0, 0});
  // The closed set {7,8} has h = 0, so no rates work.
  CHECK(c.verdict == Verdict::AlwaysEmpty);
  CHECK_FALSE(c.witness_kappa.has_value());
  const auto d = classify_deficiency_one(g, {3, -1, 0, 1, 0, 0, -2, -1});
  CHECK(d.verdict == Verdict::DependsOnKappa);
}

TEST_CASE("graph+h inputs with positive h on the inner vertices are negated") {
  const auto a = analyze(parse_inputs("vertices 3\narcs 2->1 3->2\nh -5 2 3\n"));
  CHECK(*a.h == RationalVector{5, -2, -3});
  CHECK(a.deficiency_assumed);
  CHECK_FALSE(a.classification.notes.empty());
}

TEST_CASE("verdicts are invariant under scaling and relabeling") {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 60; ++round) {
    const DiGraph g = random_single_linkage_graph(rng, 7);
    const RationalVector h = random_h(rng, g);
    const Verdict base = classify_deficiency_one(g, h).verdict;
    RationalVector scaled = h;
    for (auto& q : scaled) q *= Rational(7, 3);
    CHECK(classify_deficiency_one(g, scaled).verdict == base);
    std::vector<Vertex> perm(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto [g2, h2] = relabel(g, h, perm);
    CHECK(classify_deficiency_one(g2, h2).verdict == base);
  }
}

TEST_CASE("sampling oracle agrees on the fixtures") {
  for (const char* name : {"d8.graph", "e9.graph", "net1.net", "empty.net", "t22.graph"}) {
    const auto a = analyze_fixture(name);
    const auto r = sampling_oracle(a, 50, 1);
    CHECK_MESSAGE(r.consistent, name);
    if (a.classification.verdict == Verdict::AlwaysNonempty) CHECK(r.positive == 50);
    if (a.classification.verdict == Verdict::AlwaysEmpty) CHECK(r.positive == 0);
  }
  const auto net1 = analyze_fixture("net1.net");
  const auto r = sampling_oracle(net1, 20, 9);
  CHECK(r.witness_verified);
  CHECK(r.falsifier_verified);
  std::mt19937_64 a(5), b(5);
  CHECK(sample_rates(net1.graph, a) == sample_rates(net1.graph, b));
}

TEST_CASE("json and text reports carry the same conditions") {
  const auto a = analyze_fixture("d8.graph");
  const auto j = report_json(a);
  for (const char* key :
       {"instance", "classification", "exists_conditions", "forall_conditions", "witness_kappa", "falsifier_kappa", "oracle"})
    CHECK(j.contains(key));
  CHECK(j["classification"]["verdict"] == "AlwaysNonempty");
  REQUIRE(j["forall_conditions"].size() == 7);
  const std::string text = report_text(a);
  for (const auto& c : a.classification.forall_conditions) CHECK(text.find(format_condition(c)) != std::string::npos);
  for (const auto& c : a.classification.exists_conditions) CHECK(text.find(format_condition(c)) != std::string::npos);
  CHECK(j["forall_conditions"][5]["set"] == nlohmann::json::array({7, 8}));
  CHECK(nlohmann::json::parse(j.dump()) == j);
  CHECK(j["forall_conditions"][5]["value"] == "-4");
}
