#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dfone/condition.hpp"
#include "dfone/netmodel.hpp"
#include "dfone/steady.hpp"

namespace dfone {

enum class Verdict { AlwaysNonempty, DependsOnKappa, AlwaysEmpty };

const char* verdict_name(Verdict verdict);

struct Classification {
  Verdict verdict = Verdict::AlwaysEmpty;
  std::vector<Condition> exists_conditions;
  std::vector<Condition> forall_conditions;
  std::optional<ArcValues> witness_kappa;
  std::optional<ArcValues> falsifier_kappa;
  std::vector<std::string> notes;
};

/// Deficiency one, l = t = 1, h as in the normalization (h(C'') <= 0).
/// Strongly connected graphs are always nonempty.
Classification classify_deficiency_one(const DiGraph& graph, const RationalVector& h);

struct Analysis {
  InputMode mode = InputMode::GraphH;
  DiGraph graph;
  int species_count = -1;
  ComponentStructure components;
  AbsorbingSplit split;
  Deficiency deficiency;
  /// Graph+h inputs do not determine the deficiency; one is assumed.
  bool deficiency_assumed = false;
  std::optional<RationalVector> h;
  Classification classification;
};

/// Full pipeline. Throws UnsupportedNetwork outside l = t = 1 or for deficiency >= 2.
Analysis analyze(const Instance& instance);

/// Log-uniform rates on [1e-3, 1e3], converted exactly from double.
ArcValues sample_rates(const DiGraph& graph, std::mt19937_64& rng);

inline constexpr int kDefaultSamples = 200;

struct OracleReport {
  bool applicable = false;
  int samples = 0;
  std::uint64_t seed = 0;
  int positive = 0;
  bool witness_verified = false;
  bool falsifier_verified = false;
  bool consistent = true;
  std::vector<std::string> problems;
};

/// Compares the verdict with random rate samples and re-checks witness and falsifier.
OracleReport sampling_oracle(const Analysis& analysis, int samples, std::uint64_t seed);

}  // namespace dfone
