#pragma once

#include <stdexcept>
#include <string>

#include "dfone/digraph.hpp"
#include "dfone/linalg.hpp"
#include "dfone/netmodel.hpp"

namespace dfone {

/// Raised for inputs outside the supported class (l != t, t > 1, deficiency >= 2, ...).
class UnsupportedNetwork : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Deficiency {
  int delta = 0;
  int linkage_classes = 0;
  int terminal_classes = 0;
};

/// dim(ker B ∩ ran I) at unit rates, cross-checked against c - t - rank(B I).
Deficiency compute_deficiency(const ReactionNetwork& net);

struct HVector {
  RationalVector values;
  bool coprime_integers = false;
  std::string sign_note;
};

/// Spanning vector of the one-dimensional space ker B ∩ ran I.
HVector compute_h(const ReactionNetwork& net);

/// Scales to coprime integers and fixes the sign so that h(C'') <= 0
/// (or, when h(C'') = 0, so that the first nonzero entry is positive).
HVector normalize_h(RationalVector h, const VertexSet& c_double);

/// C' (the absorbing component) and C'' (the rest).
struct AbsorbingSplit {
  VertexSet c_prime;
  VertexSet c_double;
};

/// Requires l = t = 1; throws UnsupportedNetwork otherwise.
AbsorbingSplit split_absorbing(const DiGraph& graph);

struct ThetaVector {
  VertexSet indices;  // C''
  RationalVector values;
};

/// Solves I''ϑ'' = h'' exactly. Requires a graph that is not strongly connected.
ThetaVector solve_theta(const DiGraph& graph, const ArcValues& kappa, const RationalVector& h);

/// True iff every coordinate of ϑ'' is positive.
bool exists_for_kappa(const DiGraph& graph, const ArcValues& kappa, const RationalVector& h);

}  // namespace dfone
