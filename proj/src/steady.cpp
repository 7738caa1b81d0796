#include "dfone/steady.hpp"

#include <algorithm>

namespace dfone {

namespace {

void require_single_linkage(const ComponentStructure& s) {
  if (s.weak_count != s.terminal_count())
    throw UnsupportedNetwork("unsupported network class: l = " + std::to_string(s.weak_count) +
                             " differs from t = " + std::to_string(s.terminal_count()));
}

// Basis of ker B ∩ ran I at unit rates.
std::vector<RationalVector> intersection_basis(const ReactionNetwork& net) {
  const DiGraph g = net.graph();
  const RationalMatrix ik = build_kinetic_matrix(g, unit_rates(g));
  const auto cols = column_space(ik);
  const std::size_t c = static_cast<std::size_t>(net.complex_count());
  if (cols.empty()) return {};
  const RationalMatrix m = from_columns(cols, c);
  std::vector<RationalVector> out;
  for (const auto& y : null_space(net.complex_matrix() * m)) out.push_back(m * y);
  return out;
}

}  // namespace

Deficiency compute_deficiency(const ReactionNetwork& net) {
  const DiGraph g = net.graph();
  const ComponentStructure s = analyze_components(g);
  require_single_linkage(s);
  Deficiency d;
  d.linkage_classes = s.weak_count;
  d.terminal_classes = s.terminal_count();
  d.delta = static_cast<int>(intersection_basis(net).size());

  const RationalMatrix ik = build_kinetic_matrix(g, unit_rates(g));
  const long formula = static_cast<long>(net.complex_count()) - d.terminal_classes -
                       static_cast<long>(rank(net.complex_matrix() * ik));
  if (formula != d.delta)
    throw std::logic_error("deficiency mismatch: subspace intersection gives " + std::to_string(d.delta) +
                           ", rank formula gives " + std::to_string(formula));
  return d;
}

HVector normalize_h(RationalVector h, const VertexSet& c_double) {
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& q : h) {
    lcm_den = lcm(lcm_den, mpz_class(q.get_den()));
    gcd_num = gcd(gcd_num, mpz_class(q.get_num()));
  }
  if (gcd_num == 0) throw std::invalid_argument("h must be nonzero");
  for (auto& q : h) {
    q *= lcm_den;
    q /= gcd_num;
  }

  HVector out;
  out.coprime_integers = true;
  const Rational inner = sum_over(h, c_double);
  bool flip = false;
  if (inner > 0) {
    flip = true;
    out.sign_note = "negated so that h(C'') <= 0";
  } else if (inner < 0) {
    out.sign_note = "h(C'') < 0";
  } else {
    auto first = std::find_if(h.begin(), h.end(), [](const Rational& q) { return q != 0; });
    flip = *first < 0;
    out.sign_note = "h(C'') = 0; first nonzero coordinate made positive";
  }
  if (flip)
    for (auto& q : h) q = -q;
  out.values = std::move(h);
  return out;
}

HVector compute_h(const ReactionNetwork& net) {
  const Deficiency d = compute_deficiency(net);
  if (d.delta != 1) throw UnsupportedNetwork("h is defined only for deficiency one, got " + std::to_string(d.delta));
  const DiGraph g = net.graph();
  const AbsorbingSplit split = split_absorbing(g);
  if (split.c_double.empty()) throw UnsupportedNetwork("h is not used for strongly connected graphs");
  HVector h = normalize_h(intersection_basis(net).front(), split.c_double);

  const RationalVector bh = net.complex_matrix() * h.values;
  if (std::any_of(bh.begin(), bh.end(), [](const Rational& q) { return q != 0; }))
    throw std::logic_error("compute_h: B h != 0");
  if (sum(h.values) != 0) throw std::logic_error("compute_h: h does not sum to zero");
  return h;
}

AbsorbingSplit split_absorbing(const DiGraph& graph) {
  const ComponentStructure s = analyze_components(graph);
  require_single_linkage(s);
  if (s.weak_count != 1)
    throw UnsupportedNetwork("unsupported network class: " + std::to_string(s.weak_count) + " linkage classes");
  AbsorbingSplit split;
  split.c_prime = s.components[s.absorbing_components.front()];
  split.c_double = set_difference(graph.all_vertices(), split.c_prime);
  return split;
}

ThetaVector solve_theta(const DiGraph& graph, const ArcValues& kappa, const RationalVector& h) {
  if (static_cast<int>(h.size()) != graph.vertex_count()) throw std::invalid_argument("h has the wrong length");
  const AbsorbingSplit split = split_absorbing(graph);
  if (split.c_double.empty()) throw UnsupportedNetwork("graph is strongly connected");
  const RationalMatrix ik = build_kinetic_matrix(graph, kappa);
  std::vector<std::size_t> idx(split.c_double.begin(), split.c_double.end());
  const RationalMatrix inner = ik.submatrix(idx, idx);
  RationalVector rhs;
  for (Vertex v : split.c_double) rhs.push_back(h[v]);
  auto theta = solve(inner, rhs);
  if (!theta) throw std::logic_error("solve_theta: I'' is singular");
  const RationalVector check = inner * *theta;
  if (check != rhs) throw std::logic_error("solve_theta: nonzero residual");
  return {split.c_double, std::move(*theta)};
}

bool exists_for_kappa(const DiGraph& graph, const ArcValues& kappa, const RationalVector& h) {
  const ThetaVector theta = solve_theta(graph, kappa, h);
  return std::all_of(theta.values.begin(), theta.values.end(), [](const Rational& q) { return q > 0; });
}

}  // namespace dfone
