#include <doctest.h>

#include "dfone/netmodel.hpp"
#include "dfone/steady.hpp"
#include "support/random_instances.hpp"
#include "support/worked_examples.hpp"

using namespace dfone;
using namespace dfone::testing;

namespace {

const char* kNet1 = R"(# A -> 0, A -> 2A, 2A -> A
species A
complex 1 = 0
complex 2 = A
complex 3 = 2 A
reaction 2 -> 1
reaction 2 -> 3
reaction 3 -> 2
)";

ReactionNetwork random_network(std::mt19937_64& rng, const DiGraph& g, int species) {
  ReactionNetwork net;
  for (int s = 0; s < species; ++s) net.species.push_back("S" + std::to_string(s));
  while (true) {
    net.complexes.assign(g.vertex_count(), std::vector<long>(species, 0));
    for (auto& col : net.complexes)
      for (auto& v : col) v = uniform_int(rng, 0, 2);
    auto sorted = net.complexes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) break;
  }
  net.reactions = g.arcs();
  return net;
}

}  // namespace

TEST_CASE("graph+h file for the eight-complex graph") {
  const auto inst = parse_graph_h(
      "vertices 8\narcs 4->3 3->4 3->2 2->1 8->7 7->8 7->4 7->6 6->5 5->6 6->2 5->2\nh 12 -3 -1 -2 -1 -1 -2 -2\n");
  CHECK(inst.graph.vertex_count() == 8);
  CHECK(inst.graph.arc_count() == 12);
  CHECK(inst.graph == eight_complex());
  CHECK(inst.h == RationalVector{12, -3, -1, -2, -1, -1, -2, -2});
  CHECK(detect_mode("# comment\nvertices 2\n") == InputMode::GraphH);
}

TEST_CASE("network file with two species") {
  const auto net = parse_network("species A B; complex 1 = A; complex 2 = B; reaction 1 -> 2");
  CHECK(net.species_count() == 2);
  CHECK(net.complex_count() == 2);
  CHECK(net.reactions == std::vector<Arc>{{0, 1}});
  CHECK(std::holds_alternative<ReactionNetwork>(parse_inputs("species A B; complex 1 = A; complex 2 = B; reaction 1 -> 2")));
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_WITH_AS(parse_graph_h("vertices 3\narcs 1->2 2->3\nh 1 1 -1\n"), doctest::Contains("h must sum to zero"),
                       ParseError);
  CHECK_THROWS_AS(parse_graph_h("vertices 2\narcs 1->2\nh 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_h("vertices 2\narcs 1->1\nh 1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_h("vertices 2\narcs 1->2\nh 1 -1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_network("species A\ncomplex 1 = A\ncomplex 2 = A\nreaction 1 -> 2\n"), ParseError);
  CHECK_THROWS_AS(parse_network("species A\ncomplex 1 = A\ncomplex 2 = B\nreaction 1 -> 2\n"), ParseError);
  CHECK_THROWS_AS(parse_network("species A\ncomplex 1 = A\ncomplex 2 = 0\nreaction 1 -> 2 rate 1\nreaction 2 -> 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_inputs(""), ParseError);
  CHECK_THROWS_AS(parse_inputs("   # nothing\n"), ParseError);
}

TEST_CASE("rates are exact decimals") {
  const auto net = parse_network("species A B\ncomplex 1 = A\ncomplex 2 = B\nreaction 1 -> 2 rate 3/2\nreaction 2 -> 1 rate 0.25\n");
  REQUIRE(net.rates.size() == 2);
  CHECK(net.rates.at({0, 1}) == Rational(3, 2));
  CHECK(net.rates.at({1, 0}) == Rational(1, 4));
  CHECK_THROWS_AS(rate_values(net.graph(), {{{0, 1}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(rate_values(net.graph(), {{{0, 1}, 1}, {{1, 0}, 0}}), std::invalid_argument);
}

TEST_CASE("kinetic matrix") {
  const DiGraph single(2, {{0, 1}});
  const auto m = build_kinetic_matrix(single, ArcValues{Rational(7, 3)});
  CHECK(m.column(0) == RationalVector{Rational(-7, 3), Rational(7, 3)});
  CHECK(m.column(1) == RationalVector{0, 0});

  const DiGraph f1 = four_complex();
  CHECK(rank(build_kinetic_matrix(f1, unit_rates(f1))) == 3);
}

TEST_CASE("mass action evaluation") {
  ReactionNetwork net;
  net.species = {"A", "B"};
  net.complexes = {{1, 2}, {0, 0}};
  net.reactions = {{0, 1}};
  const auto v = eval_massaction(net, {{{0, 1}, 1}}, {2, 3});
  CHECK(v.theta == RationalVector{18, 1});
  CHECK(v.f == RationalVector{-18, -36});

  const auto ab = parse_network("species A B; complex 1 = A; complex 2 = B; reaction 1 -> 2; reaction 2 -> 1");
  const auto w = eval_massaction(ab, {{{0, 1}, 1}, {{1, 0}, 1}}, {5, 5});
  CHECK(w.f == RationalVector{0, 0});
}

TEST_CASE("deficiency and h of the three-complex network") {
  const auto net = parse_network(kNet1);
  const auto d = compute_deficiency(net);
  CHECK(d.delta == 1);
  CHECK(d.linkage_classes == 1);
  CHECK(d.terminal_classes == 1);
  const auto h = compute_h(net);
  CHECK(h.coprime_integers);
  CHECK(h.values == RationalVector{1, -2, 1});
  CHECK(sum(h.values) == 0);
  const auto bh = net.complex_matrix() * h.values;
  for (const auto& q : bh) CHECK(q == 0);
  CHECK(sum_over(h.values, split_absorbing(net.graph()).c_double) <= 0);
}

TEST_CASE("deficiency zero and the error on h") {
  const auto net = parse_network("species A B; complex 1 = A; complex 2 = B; reaction 1 -> 2; reaction 2 -> 1");
  CHECK(compute_deficiency(net).delta == 0);
  CHECK_THROWS_AS(compute_h(net), UnsupportedNetwork);
}

TEST_CASE("normalizing h") {
  const auto n = normalize_h({Rational(-1, 2), Rational(1, 4), Rational(1, 4)}, {0});
  CHECK(n.values == RationalVector{-2, 1, 1});
  const auto m = normalize_h({Rational(3), Rational(-6), Rational(3)}, {1, 2});
  CHECK(m.values == RationalVector{1, -2, 1});
}

TEST_CASE("theta on the three-vertex chain") {
  const DiGraph chain = chain_graph(3);
  const RationalVector h{5, -2, -3};
  const auto theta = solve_theta(chain, unit_rates(chain), h);
  CHECK(theta.indices == VertexSet{1, 2});
  const Rational t2 = -(h[1] + h[2]);
  CHECK(theta.values == RationalVector{t2, t2 - h[2]});
  CHECK(exists_for_kappa(chain, unit_rates(chain), h));
  CHECK_FALSE(exists_for_kappa(chain, unit_rates(chain), {1, -3, 2}));
  CHECK_THROWS_AS(split_absorbing(DiGraph(3, {{1, 0}, {1, 2}})), UnsupportedNetwork);
  CHECK_THROWS_AS(split_absorbing(DiGraph(3, {{1, 0}})), UnsupportedNetwork);
}

TEST_CASE("h with zero sum over the inner vertices never gives a positive steady state") {
  std::mt19937_64 rng(3);
  const DiGraph g = eight_complex();
  RationalVector h{0, 1, -1, 0, 0, 0, 0, 0};
  for (int k = 0; k < 20; ++k) CHECK_FALSE(exists_for_kappa(g, random_rational_rates(rng, g), h));
}

TEST_CASE("random networks: kinetic matrix, rank, residual, round trip") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 80; ++round) {
    const DiGraph g = random_single_linkage_graph(rng, 7);
    const ArcValues kappa = random_rational_rates(rng, g);
    const auto m = build_kinetic_matrix(g, kappa);
    for (std::size_t c = 0; c < m.cols(); ++c) CHECK(sum(m.column(c)) == 0);
    CHECK(rank(m) == static_cast<std::size_t>(g.vertex_count() - 1));

    const RationalVector h = random_h(rng, g);
    const auto theta = solve_theta(g, kappa, h);
    // I'' theta'' = h'' checked independently.
    const auto& idx = theta.indices;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      Rational row = 0;
      for (std::size_t c = 0; c < idx.size(); ++c) row += m(idx[r], idx[c]) * theta.values[c];
      CHECK(row == h[idx[r]]);
    }

    ReactionNetwork net = random_network(rng, g, uniform_int(rng, 2, 3));  // 3^2 >= 7 distinct complexes
    if (uniform_int(rng, 0, 1)) net.rates = rate_assignment(g, kappa);
    CHECK(parse_network(serialize(net)) == net);
    const GraphHInstance gh{g, h, net.rates};
    CHECK(parse_graph_h(serialize(gh)) == gh);

    // Both deficiency formulas run inside compute_deficiency; it must not throw.
    const auto d = compute_deficiency(net);
    CHECK(d.delta >= 0);
    CHECK(d.linkage_classes == 1);
  }
}
