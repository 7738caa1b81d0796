#include "dfone/mtree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dfone/steady.hpp"

namespace dfone {

BranchingSum branching_sum(const DiGraph& graph, const ArcValues& weights, const VertexSet& roots,
                           std::optional<PathConstraint> via) {
  if (weights.size() != graph.arc_count()) throw std::invalid_argument("weights must cover every arc");
  BranchingSum out;
  out.value = 0;
  for (ArcSet& arcs : enumerate_branchings(graph, roots, via)) {
    Rational product = 1;
    for (const Arc& a : arcs) product *= weights[*graph.arc_index(a)];
    out.value += product;
    out.terms.push_back({std::move(arcs), product});
  }
  return out;
}

BranchingSum L_value(const DiGraph& graph, const ArcValues& kappa) {
  const AbsorbingSplit split = split_absorbing(graph);
  BranchingSum l = branching_sum(graph, kappa, split.c_prime);
  if (l.value == 0) throw std::logic_error("L_value: no weight on C'-branchings");
  return l;
}

Rational branching_inverse(const DiGraph& graph, const ArcValues& kappa, Vertex i, Vertex j) {
  const AbsorbingSplit split = split_absorbing(graph);
  if (!contains(split.c_double, i) || !contains(split.c_double, j)) throw std::invalid_argument("i and j must lie in C''");
  const Rational l = L_value(graph, kappa).value;
  const Rational numerator = branching_sum(graph, kappa, set_union(split.c_prime, {j}), PathConstraint{i, j}).value;
  return -numerator / l;
}

Rational theta_branching(const DiGraph& graph, const ArcValues& kappa, const RationalVector& h, Vertex j) {
  const AbsorbingSplit split = split_absorbing(graph);
  if (!contains(split.c_double, j)) throw std::invalid_argument("j must lie in C''");
  const Rational l = L_value(graph, kappa).value;
  Rational total = 0;
  for (const BranchingTerm& t : branching_sum(graph, kappa, set_union(split.c_prime, {j})).terms)
    total += t.product * sum_over(h, arborescence_vertices(graph, t.arcs, j));
  return -total / l;
}

std::pair<DiGraph, ArcValues> matrix_graph(const RationalMatrix& z) {
  if (z.rows() != z.cols()) throw std::invalid_argument("matrix must be square");
  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < z.rows(); ++a)
    for (std::size_t b = 0; b < z.cols(); ++b)
      if (a != b && z(a, b) != 0) arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  DiGraph g(static_cast<int>(z.rows()), arcs);
  ArcValues w;
  for (const Arc& a : g.arcs()) w.push_back(z(a.tail, a.head));
  return {std::move(g), std::move(w)};
}

MatrixTreeValues matrix_tree_identity(const RationalMatrix& z, const VertexSet& q, Vertex i, Vertex j) {
  const std::size_t n = z.rows();
  if (z.cols() != n) throw std::invalid_argument("matrix must be square");
  for (std::size_t r = 0; r < n; ++r) {
    Rational row = 0;
    for (std::size_t c = 0; c < n; ++c) row += z(r, c);
    if (row != 0) throw std::invalid_argument("row sums must be zero");
  }
  if (contains(q, i) || contains(q, j)) throw std::invalid_argument("i and j must lie outside Q");

  std::vector<std::size_t> drop_rows(q.begin(), q.end()), drop_cols(q.begin(), q.end());
  drop_rows.push_back(j);
  drop_cols.push_back(i);
  MatrixTreeValues out;
  out.minor = determinant(z.minor_matrix(drop_rows, drop_cols));

  const auto [graph, weights] = matrix_graph(z);
  const Rational total = branching_sum(graph, weights, set_union(q, {j}), PathConstraint{i, j}).value;
  // i and j enter the sign through their positions among the kept indices;
  // every member of Q below one of them shifts that position by one.
  const auto position = [&](Vertex v) {
    return v - static_cast<long>(std::count_if(q.begin(), q.end(), [v](Vertex x) { return x < v; }));
  };
  const long exponent = position(i) + position(j) + static_cast<long>(n - q.size() - 1);
  out.branching = exponent % 2 == 0 ? total : Rational(-total);
  return out;
}

int sign_of_bijection(const std::vector<int>& domain, const std::vector<int>& image) {
  if (domain.size() != image.size()) throw std::invalid_argument("bijection sides differ in size");
  int inversions = 0;
  for (std::size_t a = 0; a < domain.size(); ++a)
    for (std::size_t b = 0; b < domain.size(); ++b)
      if (domain[a] < domain[b] && image[a] > image[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Rational brute_determinant(const RationalMatrix& z) {
  const std::size_t n = z.rows();
  if (z.cols() != n) throw std::invalid_argument("matrix must be square");
  if (n > static_cast<std::size_t>(kBruteDeterminantCap)) throw std::length_error("brute_determinant: matrix too large");
  std::vector<int> rows(n), perm(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = sign_of_bijection(rows, perm);
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= z(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace dfone
