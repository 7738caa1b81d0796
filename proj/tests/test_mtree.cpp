#include <doctest.h>

#include "dfone/mtree.hpp"
#include "dfone/netmodel.hpp"
#include "dfone/steady.hpp"
#include "support/random_instances.hpp"
#include "support/worked_examples.hpp"

using namespace dfone;
using namespace dfone::testing;

namespace {

// κ_ab as the rational 1/prime so every monomial has a distinct value.
ArcValues distinct_weights(const DiGraph& g) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  ArcValues out;
  for (std::size_t k = 0; k < g.arc_count(); ++k) out.push_back(Rational(1, primes[k]));
  return out;
}

Rational w(const DiGraph& g, const ArcValues& weights, int tail, int head) {
  return weights[*g.arc_index({tail - 1, head - 1})];
}

}  // namespace

TEST_CASE("branching sums of the four-complex graph") {
  const DiGraph g = four_complex();
  const ArcValues k = distinct_weights(g);
  const auto l = L_value(g, k);
  CHECK(l.terms.size() == 3);
  CHECK(l.value == w(g, k, 2, 1) * w(g, k, 3, 2) * w(g, k, 4, 3) + w(g, k, 2, 1) * w(g, k, 3, 2) * w(g, k, 4, 2) +
                       w(g, k, 2, 1) * w(g, k, 3, 4) * w(g, k, 4, 2));
  const auto num = branching_sum(g, k, ids({1, 4}), PathConstraint{1, 3});
  CHECK(num.terms.size() == 3);
  for (const auto& t : num.terms) CHECK(t.arcs.size() == 2);
  CHECK(num.value == w(g, k, 2, 3) * w(g, k, 3, 4) + w(g, k, 2, 4) * w(g, k, 3, 2) + w(g, k, 2, 4) * w(g, k, 3, 4));
}

TEST_CASE("inverse entry and determinant at unit rates") {
  const DiGraph g = four_complex();
  const ArcValues ones = unit_rates(g);
  CHECK(branching_inverse(g, ones, 1, 3) == -1);
  const auto m = build_kinetic_matrix(g, ones);
  const auto inner = m.submatrix({1, 2, 3}, {1, 2, 3});
  const auto inv = inverse(inner);
  REQUIRE(inv);
  CHECK((*inv)(2, 0) == -1);
  CHECK(determinant(inner.transpose()) == -3);
  CHECK(L_value(g, ones).value == 3);

  const auto id = matrix_tree_identity(m.transpose(), {}, 0, 0);
  CHECK(id.minor == -3);
  CHECK(id.branching == -3);
}

TEST_CASE("two-by-two identity") {
  const Rational a(3, 2), b(5);
  const auto z = RationalMatrix::from_rows({{-a, a}, {b, -b}});
  const auto v = matrix_tree_identity(z, {}, 0, 1);
  CHECK(v.minor == a);
  CHECK(v.branching == a);
}

TEST_CASE("deleted indices between i and j shift the sign") {
  // Q = {2} sits between i = 1 and j = 3 (1-based).
  const auto z = RationalMatrix::from_rows({{-2, 1, 1}, {1, -3, 2}, {3, 1, -4}});
  const auto v = matrix_tree_identity(z, {1}, 0, 2);
  CHECK(v.minor == v.branching);
  CHECK(v.minor == 1);
}

TEST_CASE("signs and brute determinants") {
  CHECK(sign_of_bijection({0, 1, 2}, {0, 1, 2}) == 1);
  CHECK(sign_of_bijection({0, 1}, {1, 0}) == -1);
  // σ: {2} -> {1} extended by 1 -> 2 is a transposition.
  CHECK(sign_of_bijection({1, 0}, {0, 1}) == -1);
  std::mt19937_64 rng(37);
  RationalMatrix m(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = uniform_int(rng, -5, 5);
  CHECK(brute_determinant(m) == determinant(m));
  CHECK_THROWS_AS(brute_determinant(RationalMatrix(9, 9)), std::length_error);
}

TEST_CASE("random row-sum-zero matrices") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 120; ++round) {
    const int n = uniform_int(rng, 1, 6);
    const auto z = random_row_sum_zero(rng, n);
    CHECK(brute_determinant(z) == determinant(z));
    VertexSet q;
    for (int v = 0; v < n; ++v)
      if (uniform_int(rng, 0, 3) == 0) q.push_back(v);
    VertexSet rest;
    for (int v = 0; v < n; ++v)
      if (!contains(q, v)) rest.push_back(v);
    if (rest.empty()) continue;
    const Vertex i = rest[uniform_int(rng, 0, static_cast<int>(rest.size()) - 1)];
    const Vertex j = rest[uniform_int(rng, 0, static_cast<int>(rest.size()) - 1)];
    const auto v = matrix_tree_identity(z, q, i, j);
    CHECK(v.minor == v.branching);
  }
}

TEST_CASE("random instances: branching formulas against exact inversion") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 60; ++round) {
    const DiGraph g = random_single_linkage_graph(rng, 7);
    const ArcValues kappa = random_rational_rates(rng, g);
    const RationalVector h = random_h(rng, g);
    const auto split = split_absorbing(g);
    const auto& cd = split.c_double;
    std::vector<std::size_t> idx(cd.begin(), cd.end());
    const auto inner = build_kinetic_matrix(g, kappa).submatrix(idx, idx);
    const auto inv = inverse(inner);
    REQUIRE(inv);
    for (std::size_t a = 0; a < cd.size(); ++a)
      for (std::size_t b = 0; b < cd.size(); ++b) CHECK(branching_inverse(g, kappa, cd[b], cd[a]) == (*inv)(a, b));
    const auto theta = solve_theta(g, kappa, h);
    for (std::size_t a = 0; a < cd.size(); ++a) CHECK(theta_branching(g, kappa, h, cd[a]) == theta.values[a]);

    // det(I''ᵀ) = (-1)^{c''} L.
    const auto m = build_kinetic_matrix(g, kappa);
    const Rational l = L_value(g, kappa).value;
    const Rational expected = cd.size() % 2 == 0 ? l : Rational(-l);
    CHECK(determinant(inner.transpose()) == expected);
    const Vertex j = cd.front();
    const auto id = matrix_tree_identity(m.transpose(), split.c_prime, j, j);
    CHECK(id.minor == id.branching);
  }
}
