#include "dfone/netmodel.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace dfone {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

struct Statement {
  int line = 0;
  std::vector<Token> tokens;
};

// Splits into statements (newline or ';'), strips '#' comments and separates "->".
std::vector<Statement> tokenize(std::string_view text) {
  std::vector<Statement> out;
  int line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    if (auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);

    Statement current{line, {}};
    std::size_t i = 0;
    while (i < row.size()) {
      const char ch = row[i];
      if (ch == ';') {
        if (!current.tokens.empty()) out.push_back(std::move(current));
        current = Statement{line, {}};
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < row.size() && !std::isspace(static_cast<unsigned char>(row[j])) && row[j] != ';') ++j;
      std::string_view word = row.substr(i, j - i);
      std::size_t k = 0;
      while (k < word.size()) {
        const std::size_t arrow = word.find("->", k);
        if (arrow == std::string_view::npos) {
          current.tokens.push_back({std::string(word.substr(k)), static_cast<int>(i + k + 1)});
          break;
        }
        if (arrow > k) current.tokens.push_back({std::string(word.substr(k, arrow - k)), static_cast<int>(i + k + 1)});
        current.tokens.push_back({"->", static_cast<int>(i + arrow + 1)});
        k = arrow + 2;
      }
      i = j;
    }
    if (!current.tokens.empty()) out.push_back(std::move(current));
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Statement& s) : s_(s) {}

  bool done() const { return next_ >= s_.tokens.size(); }
  const Token& peek() const { return s_.tokens[next_]; }

  [[noreturn]] void fail(const std::string& message) const {
    const int column = done() ? end_column() : peek().column;
    throw ParseError(s_.line, column, message);
  }

  const Token& take(const std::string& what) {
    if (done()) fail("expected " + what);
    return s_.tokens[next_++];
  }

  void expect(const std::string& literal) {
    if (done() || peek().text != literal) fail("expected '" + literal + "'");
    ++next_;
  }

  long integer(const std::string& what) {
    const Token& t = take(what);
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(s_.line, t.column, "expected " + what + ", got '" + t.text + "'");
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      throw ParseError(s_.line, t.column, what + " out of range");
    }
  }

  Rational rational(const std::string& what) {
    const Token& t = take(what);
    try {
      return parse_rational(t.text);
    } catch (const std::invalid_argument&) {
      throw ParseError(s_.line, t.column, "expected " + what + ", got '" + t.text + "'");
    }
  }

  // 1-based index in [1, limit] converted to 0-based.
  Vertex index(const std::string& what, long limit) {
    const int column = done() ? end_column() : peek().column;
    const long value = integer(what);
    if (value < 1 || value > limit)
      throw ParseError(s_.line, column, what + " " + std::to_string(value) + " out of range 1.." + std::to_string(limit));
    return static_cast<Vertex>(value - 1);
  }

  Arc arc(long limit) {
    const int column = done() ? end_column() : peek().column;
    const Vertex tail = index("vertex", limit);
    expect("->");
    const Vertex head = index("vertex", limit);
    if (tail == head) throw ParseError(s_.line, column, "self-loop " + format_arc({tail, head}) + " is not allowed");
    return {tail, head};
  }

  void finish() const {
    if (!done()) fail("unexpected '" + peek().text + "'");
  }

  int line() const { return s_.line; }
  int first_column() const { return s_.tokens.front().column; }

 private:
  int end_column() const {
    const Token& last = s_.tokens.back();
    return last.column + static_cast<int>(last.text.size());
  }

  const Statement& s_;
  std::size_t next_ = 1;  // token 0 is the keyword
};

bool valid_name(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  });
}

void check_rates(const RateAssignment& rates, std::size_t arc_count, int line) {
  if (!rates.empty() && rates.size() != arc_count)
    throw ParseError(line, 1, "rates must be given for every reaction or for none");
}

}  // namespace

InputMode detect_mode(std::string_view text) {
  const auto statements = tokenize(text);
  if (statements.empty()) throw ParseError(1, 1, "empty input");
  const std::string& keyword = statements.front().tokens.front().text;
  if (keyword == "species" || keyword == "complex" || keyword == "reaction") return InputMode::Network;
  if (keyword == "vertices" || keyword == "arcs" || keyword == "h" || keyword == "rate") return InputMode::GraphH;
  throw ParseError(statements.front().line, statements.front().tokens.front().column, "unknown keyword '" + keyword + "'");
}

ReactionNetwork parse_network(std::string_view text) {
  const auto statements = tokenize(text);
  if (statements.empty()) throw ParseError(1, 1, "empty input");

  ReactionNetwork net;
  bool have_species = false;
  std::map<long, std::pair<std::vector<long>, int>> complexes;  // index -> (coefficients, line)
  std::set<Arc> seen;
  int last_line = 1;

  for (const Statement& s : statements) {
    Cursor cur(s);
    last_line = s.line;
    const std::string& keyword = s.tokens.front().text;
    if (keyword == "species") {
      if (have_species) cur.fail("species declared twice");
      if (cur.done()) cur.fail("expected at least one species name");
      while (!cur.done()) {
        const Token& t = cur.take("species name");
        if (!valid_name(t.text)) throw ParseError(s.line, t.column, "invalid species name '" + t.text + "'");
        if (std::find(net.species.begin(), net.species.end(), t.text) != net.species.end())
          throw ParseError(s.line, t.column, "duplicate species '" + t.text + "'");
        net.species.push_back(t.text);
      }
      have_species = true;
    } else if (keyword == "complex") {
      if (!have_species) cur.fail("complex declared before species");
      const int column = cur.peek().column;
      const long idx = cur.integer("complex index");
      if (idx < 1) throw ParseError(s.line, column, "complex indices start at 1");
      if (complexes.count(idx)) throw ParseError(s.line, column, "complex " + std::to_string(idx) + " declared twice");
      cur.expect("=");
      std::vector<long> coefficients(net.species.size(), 0);
      if (!cur.done() && cur.peek().text == "0") {
        cur.take("0");
      } else {
        while (true) {
          long coefficient = 1;
          if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek().text[0]))) {
            coefficient = cur.integer("coefficient");
            if (coefficient < 1) cur.fail("coefficients must be positive");
          }
          const Token& name = cur.take("species name");
          auto it = std::find(net.species.begin(), net.species.end(), name.text);
          if (it == net.species.end()) throw ParseError(s.line, name.column, "unknown species '" + name.text + "'");
          coefficients[it - net.species.begin()] += coefficient;
          if (cur.done()) break;
          cur.expect("+");
        }
      }
      cur.finish();
      complexes[idx] = {std::move(coefficients), s.line};
    } else if (keyword == "reaction") {
      const int column = cur.peek().column;
      const long tail = cur.integer("complex index");
      cur.expect("->");
      const long head = cur.integer("complex index");
      if (tail < 1 || head < 1) throw ParseError(s.line, column, "complex indices start at 1");
      if (tail == head) throw ParseError(s.line, column, "self-loop reaction " + std::to_string(tail) + " -> " + std::to_string(head));
      const Arc arc{static_cast<Vertex>(tail - 1), static_cast<Vertex>(head - 1)};
      if (!seen.insert(arc).second) throw ParseError(s.line, column, "duplicate reaction " + format_arc(arc));
      if (!cur.done()) {
        cur.expect("rate");
        const int rate_column = cur.done() ? column : cur.peek().column;
        Rational rate = cur.rational("rate");
        if (rate <= 0) throw ParseError(s.line, rate_column, "rates must be positive");
        net.rates[arc] = rate;
      }
      cur.finish();
      net.reactions.push_back(arc);
    } else {
      throw ParseError(s.line, s.tokens.front().column, "unknown keyword '" + keyword + "'");
    }
  }

  if (!have_species) throw ParseError(1, 1, "missing species declaration");
  long expected = 1;
  for (auto& [idx, entry] : complexes) {
    if (idx != expected) throw ParseError(entry.second, 1, "complex indices must be contiguous from 1; missing " + std::to_string(expected));
    ++expected;
  }
  for (auto& [idx, entry] : complexes) net.complexes.push_back(entry.first);
  for (std::size_t a = 0; a < net.complexes.size(); ++a)
    for (std::size_t b = a + 1; b < net.complexes.size(); ++b)
      if (net.complexes[a] == net.complexes[b])
        throw ParseError(complexes[static_cast<long>(b + 1)].second, 1,
                         "duplicate complex: " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
  if (net.complexes.empty()) throw ParseError(last_line, 1, "no complexes declared");
  for (const Arc& a : net.reactions)
    if (a.tail >= net.complex_count() || a.head >= net.complex_count())
      throw ParseError(last_line, 1, "reaction " + format_arc(a) + " references an undeclared complex");
  std::sort(net.reactions.begin(), net.reactions.end());
  check_rates(net.rates, net.reactions.size(), last_line);
  return net;
}

GraphHInstance parse_graph_h(std::string_view text) {
  const auto statements = tokenize(text);
  if (statements.empty()) throw ParseError(1, 1, "empty input");

  long c = -1;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  std::optional<RationalVector> h;
  int h_line = 1;
  std::vector<std::pair<Arc, Rational>> rates;

  for (const Statement& s : statements) {
    Cursor cur(s);
    const std::string& keyword = s.tokens.front().text;
    if (keyword == "vertices") {
      if (c >= 0) cur.fail("vertices declared twice");
      c = cur.integer("vertex count");
      if (c < 1) throw ParseError(s.line, s.tokens[1].column, "vertex count must be at least 1");
      cur.finish();
    } else if (keyword == "arcs") {
      if (c < 0) cur.fail("arcs before vertices");
      while (!cur.done()) {
        const int column = cur.peek().column;
        const Arc a = cur.arc(c);
        if (!seen.insert(a).second) throw ParseError(s.line, column, "duplicate arc " + format_arc(a));
        arcs.push_back(a);
      }
    } else if (keyword == "h") {
      if (c < 0) cur.fail("h before vertices");
      if (h) cur.fail("h declared twice");
      RationalVector values;
      while (!cur.done()) values.push_back(cur.rational("rational"));
      if (static_cast<long>(values.size()) != c)
        throw ParseError(s.line, s.tokens.front().column,
                         "h has " + std::to_string(values.size()) + " entries, expected " + std::to_string(c));
      if (sum(values) != 0) throw ParseError(s.line, s.tokens.front().column, "h must sum to zero");
      if (std::all_of(values.begin(), values.end(), [](const Rational& q) { return q == 0; }))
        throw ParseError(s.line, s.tokens.front().column, "h must be nonzero");
      h = std::move(values);
      h_line = s.line;
    } else if (keyword == "rate") {
      if (c < 0) cur.fail("rate before vertices");
      const Arc a = cur.arc(c);
      const int column = cur.done() ? 1 : cur.peek().column;
      Rational q = cur.rational("rate");
      if (q <= 0) throw ParseError(s.line, column, "rates must be positive");
      cur.finish();
      rates.emplace_back(a, q);
    } else {
      throw ParseError(s.line, s.tokens.front().column, "unknown keyword '" + keyword + "'");
    }
  }
  if (c < 0) throw ParseError(1, 1, "missing vertices declaration");
  if (!h) throw ParseError(statements.back().line, 1, "missing h declaration");

  GraphHInstance out{DiGraph(static_cast<int>(c), arcs), std::move(*h), {}};
  for (const auto& [a, q] : rates) {
    if (!seen.count(a)) throw ParseError(h_line, 1, "rate given for missing arc " + format_arc(a));
    if (!out.rates.emplace(a, q).second) throw ParseError(h_line, 1, "rate for " + format_arc(a) + " given twice");
  }
  check_rates(out.rates, out.graph.arc_count(), statements.back().line);
  return out;
}

Instance parse_inputs(std::string_view text, InputMode mode) {
  if (mode == InputMode::Network) return parse_network(text);
  return parse_graph_h(text);
}

Instance parse_inputs(std::string_view text) { return parse_inputs(text, detect_mode(text)); }

std::string serialize(const ReactionNetwork& net) {
  std::ostringstream os;
  os << "species";
  for (const auto& s : net.species) os << ' ' << s;
  os << '\n';
  for (std::size_t i = 0; i < net.complexes.size(); ++i) {
    os << "complex " << i + 1 << " =";
    bool first = true;
    for (std::size_t s = 0; s < net.species.size(); ++s) {
      const long coefficient = net.complexes[i][s];
      if (coefficient == 0) continue;
      os << (first ? " " : " + ");
      if (coefficient != 1) os << coefficient << ' ';
      os << net.species[s];
      first = false;
    }
    if (first) os << " 0";
    os << '\n';
  }
  for (const Arc& a : net.reactions) {
    os << "reaction " << a.tail + 1 << " -> " << a.head + 1;
    if (auto it = net.rates.find(a); it != net.rates.end()) os << " rate " << to_string(it->second);
    os << '\n';
  }
  return os.str();
}

std::string serialize(const GraphHInstance& instance) {
  std::ostringstream os;
  os << "vertices " << instance.graph.vertex_count() << '\n';
  if (instance.graph.arc_count() > 0) {
    os << "arcs";
    for (const Arc& a : instance.graph.arcs()) os << ' ' << format_arc(a);
    os << '\n';
  }
  os << 'h';
  for (const auto& q : instance.h) os << ' ' << to_string(q);
  os << '\n';
  for (const auto& [a, q] : instance.rates) os << "rate " << format_arc(a) << ' ' << to_string(q) << '\n';
  return os.str();
}

RationalMatrix ReactionNetwork::complex_matrix() const {
  RationalMatrix b(species.size(), complexes.size());
  for (std::size_t i = 0; i < complexes.size(); ++i)
    for (std::size_t s = 0; s < species.size(); ++s) b(s, i) = complexes[i][s];
  return b;
}

ArcValues rate_values(const DiGraph& graph, const RateAssignment& kappa) {
  ArcValues values(graph.arc_count());
  std::vector<bool> filled(graph.arc_count(), false);
  for (const auto& [arc, q] : kappa) {
    auto k = graph.arc_index(arc);
    if (!k) throw std::invalid_argument("rate given for " + format_arc(arc) + ", which is not a reaction");
    if (q <= 0) throw std::invalid_argument("rate for " + format_arc(arc) + " is not positive");
    values[*k] = q;
    filled[*k] = true;
  }
  for (std::size_t k = 0; k < graph.arc_count(); ++k)
    if (!filled[k]) throw std::invalid_argument("missing rate for " + format_arc(graph.arcs()[k]));
  return values;
}

RateAssignment rate_assignment(const DiGraph& graph, const ArcValues& values) {
  if (values.size() != graph.arc_count()) throw std::invalid_argument("rate vector has the wrong length");
  RateAssignment out;
  for (std::size_t k = 0; k < values.size(); ++k) out[graph.arcs()[k]] = values[k];
  return out;
}

ArcValues unit_rates(const DiGraph& graph) { return ArcValues(graph.arc_count(), Rational(1)); }

RationalMatrix build_kinetic_matrix(const DiGraph& graph, const ArcValues& kappa) {
  if (kappa.size() != graph.arc_count()) throw std::invalid_argument("rate vector has the wrong length");
  const auto c = static_cast<std::size_t>(graph.vertex_count());
  RationalMatrix m(c, c);
  for (std::size_t k = 0; k < graph.arc_count(); ++k) {
    const Arc& a = graph.arcs()[k];
    if (kappa[k] <= 0) throw std::invalid_argument("rate for " + format_arc(a) + " is not positive");
    m(a.head, a.tail) += kappa[k];
    m(a.tail, a.tail) -= kappa[k];
  }
  return m;
}

RationalMatrix build_kinetic_matrix(const DiGraph& graph, const RateAssignment& kappa) {
  return build_kinetic_matrix(graph, rate_values(graph, kappa));
}

MassActionValue eval_massaction(const ReactionNetwork& net, const RateAssignment& kappa, const RationalVector& x) {
  if (static_cast<int>(x.size()) != net.species_count())
    throw std::invalid_argument("concentration vector has " + std::to_string(x.size()) + " entries, expected " +
                                std::to_string(net.species_count()));
  for (const auto& q : x)
    if (q < 0) throw std::invalid_argument("concentrations must be nonnegative");
  MassActionValue out;
  out.theta.assign(net.complexes.size(), Rational(1));
  for (std::size_t i = 0; i < net.complexes.size(); ++i)
    for (std::size_t s = 0; s < x.size(); ++s)
      for (long p = 0; p < net.complexes[i][s]; ++p) out.theta[i] *= x[s];
  const RationalMatrix ik = build_kinetic_matrix(net.graph(), kappa);
  out.f = net.complex_matrix() * (ik * out.theta);
  return out;
}

}  // namespace dfone
