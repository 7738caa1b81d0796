#pragma once

#include <optional>
#include <vector>

#include "dfone/digraph.hpp"
#include "dfone/linalg.hpp"

namespace dfone {

struct BranchingTerm {
  ArcSet arcs;
  Rational product;
};

struct BranchingSum {
  Rational value;
  std::vector<BranchingTerm> terms;
};

/// Sum over U-branchings (optionally only those with an i->j path) of the
/// product of arc weights.
BranchingSum branching_sum(const DiGraph& graph, const ArcValues& weights, const VertexSet& roots,
                           std::optional<PathConstraint> via = std::nullopt);

/// Weighted count of C'-branchings.
BranchingSum L_value(const DiGraph& graph, const ArcValues& kappa);

/// Entry (j,i) of the inverse of I'' from branchings; i, j in C''.
Rational branching_inverse(const DiGraph& graph, const ArcValues& kappa, Vertex i, Vertex j);

/// ϑ_j = -(1/L) Σ κ_Ã h(V[Ã,j]) over (C' ∪ {j})-branchings.
Rational theta_branching(const DiGraph& graph, const ArcValues& kappa, const RationalVector& h, Vertex j);

/// Graph of the nonzero off-diagonal entries of a square matrix, with their values.
std::pair<DiGraph, ArcValues> matrix_graph(const RationalMatrix& z);

struct MatrixTreeValues {
  Rational minor;
  Rational branching;
};

/// Both sides of the Matrix-Tree identity for a row-sum-zero Z: the minor with
/// rows Q∪{j} and columns Q∪{i} deleted, and the signed sum over
/// (Q∪{j})-branchings of D(Z) containing an i->j path. The sign uses the
/// positions of i and j after Q is removed.
MatrixTreeValues matrix_tree_identity(const RationalMatrix& z, const VertexSet& q, Vertex i, Vertex j);

/// (-1)^(number of inversions) of the bijection domain[k] -> image[k].
int sign_of_bijection(const std::vector<int>& domain, const std::vector<int>& image);

inline constexpr int kBruteDeterminantCap = 8;

/// Signed permutation expansion; throws std::length_error above the cap.
Rational brute_determinant(const RationalMatrix& z);

}  // namespace dfone
