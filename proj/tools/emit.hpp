#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "suite.hpp"

namespace poissonz::cli {

inline constexpr const char* kSchema = "poissonz.report/1";

enum class OutputFormat { Json, Text, Csv };
OutputFormat parse_format(const std::string& s);

/// Run metadata repeated in every document.
struct RunInfo {
  std::string command;
  std::string mode;  // "auto" when unset
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  long height = 0;
};

void emit_suites(std::ostream& os, OutputFormat f, const RunInfo& info, const std::vector<SuiteResult>& results);
void emit_pencil(std::ostream& os, OutputFormat f, const RunInfo& info, const PencilSummary& p);

}  // namespace poissonz::cli
