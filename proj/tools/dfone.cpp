// Command-line front end: analyze, classify, witness, oracle, branchings.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dfone/classify.hpp"
#include "dfone/mtree.hpp"
#include "dfone/report.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitInternal = 70;

struct NoInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NoInput("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int verdict_code(dfone::Verdict v) {
  switch (v) {
    case dfone::Verdict::AlwaysNonempty:
      return 0;
    case dfone::Verdict::DependsOnKappa:
      return 1;
    case dfone::Verdict::AlwaysEmpty:
      return 2;
  }
  return kExitInternal;
}

dfone::VertexSet parse_roots(const std::string& list, int vertex_count) {
  dfone::VertexSet out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const int v = std::stoi(item);
    if (v < 1 || v > vertex_count) throw std::invalid_argument("root " + item + " out of range");
    out.push_back(v - 1);
  }
  return dfone::make_vertex_set(out);
}

void print_rates(const dfone::DiGraph& g, const dfone::ArcValues& rates) {
  for (std::size_t k = 0; k < g.arc_count(); ++k)
    std::cout << "rate " << dfone::format_arc(g.arcs()[k]) << ' ' << dfone::to_string(rates[k]) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive steady states of deficiency-one mass-action networks"};
  app.require_subcommand(1);

  std::string file, format = "text", roots, via;
  std::uint64_t seed = 0;
  int samples = dfone::kDefaultSamples;
  bool cyclic = false;

  auto* analyze = app.add_subcommand("analyze", "full report");
  analyze->add_option("FILE", file)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--samples", samples, "random rate samples for the oracle section (0 to skip)");
  analyze->add_option("--seed", seed);

  auto* classify = app.add_subcommand("classify", "verdict only; exit 0/1/2 for nonempty/depends/empty");
  classify->add_option("FILE", file)->required();

  auto* witness = app.add_subcommand("witness", "rates with positive steady states, and a falsifier when one exists");
  witness->add_option("FILE", file)->required();
  witness->add_option("--seed", seed);

  auto* oracle = app.add_subcommand("oracle", "random-rate consistency check");
  oracle->add_option("FILE", file)->required();
  oracle->add_option("--samples", samples)->required();
  oracle->add_option("--seed", seed);

  auto* branchings = app.add_subcommand("branchings", "enumerate U-branchings");
  branchings->add_option("FILE", file)->required();
  branchings->add_option("--roots", roots)->required();
  branchings->add_option("--via", via, "i:j, keep branchings with an i->j path");
  branchings->add_flag("--cyclic", cyclic, "drop the acyclicity requirement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const dfone::Instance instance = dfone::parse_inputs(read_file(file));

    if (*branchings) {
      const dfone::DiGraph g = std::holds_alternative<dfone::ReactionNetwork>(instance)
                                   ? std::get<dfone::ReactionNetwork>(instance).graph()
                                   : std::get<dfone::GraphHInstance>(instance).graph;
      std::optional<dfone::PathConstraint> constraint;
      if (!via.empty()) {
        const auto colon = via.find(':');
        if (colon == std::string::npos) {
          std::cerr << "--via expects i:j\n";
          return kExitUsage;
        }
        const auto from = parse_roots(via.substr(0, colon), g.vertex_count());
        const auto to = parse_roots(via.substr(colon + 1), g.vertex_count());
        if (from.size() != 1 || to.size() != 1) {
          std::cerr << "--via expects i:j\n";
          return kExitUsage;
        }
        constraint = dfone::PathConstraint{from.front(), to.front()};
      }
      const auto sets = dfone::enumerate_branchings(g, parse_roots(roots, g.vertex_count()), constraint, cyclic);
      for (const auto& arcs : sets) {
        for (std::size_t k = 0; k < arcs.size(); ++k) std::cout << (k ? " " : "") << dfone::format_arc(arcs[k]);
        std::cout << '\n';
      }
      std::cout << "count " << sets.size() << '\n';
      return 0;
    }

    const dfone::Analysis analysis = dfone::analyze(instance);

    if (*analyze) {
      std::optional<dfone::OracleReport> report;
      if (samples > 0) report = dfone::sampling_oracle(analysis, samples, seed);
      if (format == "json")
        std::cout << dfone::report_json(analysis, report).dump(2) << '\n';
      else
        std::cout << dfone::report_text(analysis, report);
      return report && !report->consistent ? kExitInternal : 0;
    }

    if (*classify) {
      std::cout << dfone::verdict_name(analysis.classification.verdict) << '\n';
      return verdict_code(analysis.classification.verdict);
    }

    if (*witness) {
      const auto& c = analysis.classification;
      if (c.verdict == dfone::Verdict::AlwaysEmpty) {
        std::cout << "no rates give positive steady states\n";
        return verdict_code(c.verdict);
      }
      dfone::ArcValues rates;
      if (c.witness_kappa) {
        rates = *c.witness_kappa;
      } else {
        std::mt19937_64 rng(seed);
        rates = dfone::sample_rates(analysis.graph, rng);
      }
      if (analysis.h && !analysis.split.c_double.empty() && !dfone::exists_for_kappa(analysis.graph, rates, *analysis.h)) {
        std::cerr << "internal error: witness rates fail the steady-state test\n";
        return kExitInternal;
      }
      std::cout << "# witness\n";
      print_rates(analysis.graph, rates);
      if (c.falsifier_kappa) {
        std::cout << "# falsifier\n";
        print_rates(analysis.graph, *c.falsifier_kappa);
      }
      return verdict_code(c.verdict);
    }

    if (*oracle) {
      const auto report = dfone::sampling_oracle(analysis, samples, seed);
      std::cout << dfone::report_text(analysis, report);
      return report.consistent ? 0 : kExitInternal;
    }
  } catch (const NoInput& e) {
    std::cerr << e.what() << '\n';
    return kExitNoInput;
  } catch (const dfone::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitData;
  } catch (const dfone::UnsupportedNetwork& e) {
    std::cerr << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
