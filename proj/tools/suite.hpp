#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "poissonz/pencil.hpp"
#include "poissonz/report.hpp"
#include "poissonz/zconstruct.hpp"

namespace poissonz::cli {

/// Check groups in execution order.
const std::vector<std::string>& all_groups();
/// Groups run when --checks is not given.
std::set<std::string> default_groups();
/// Parses a comma list; "all" and "none" are accepted. Throws Error on unknown names.
std::set<std::string> parse_groups(const std::string& text);

struct RunConfig {
  std::vector<std::string> pairs;
  std::optional<Mode> mode;  // unset: symbolic up to dim 15
  std::uint64_t seed = 1;
  std::size_t samples = 5;
  long height = kDefaultHeight;
  std::size_t jobs = 1;
  std::set<std::string> groups = default_groups();
  std::string chain;
};

struct GeneratorRow {
  std::string name;
  std::optional<BiDegree> bideg;
  int degree = 0;
};

struct SuiteResult {
  VerificationReport report;
  std::string mode;
  std::vector<GeneratorRow> generators;
  std::vector<std::string> notes;  // groups skipped and why
};

/// Identities are evaluated on every subset of the complementary wedge; above this dimension they are skipped.
inline constexpr std::size_t kIdentityDimLimit = 21;

SuiteResult run_suite(const std::string& key, const RunConfig& cfg);
SuiteResult run_chain(const std::string& chain, const RunConfig& cfg);

struct PencilSummary {
  VerificationReport report;
  std::size_t n = 0;
  JkSummary jk;
  std::size_t generic_rank = 0;
};
PencilSummary run_pencil(const Pencil& p, const std::string& label);

}  // namespace poissonz::cli
