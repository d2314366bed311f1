#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace poissonz {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string witness;
};

/// Ordered list of named checks; passes iff every check passes.
struct VerificationReport {
  std::string pair;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Check> checks;

  bool pass() const;
  Check& add(std::string name, std::string expected, std::string computed, bool pass, std::string witness = {});
  /// Appends the other report's checks, prefixing names with `prefix` when given.
  void merge(const VerificationReport& other, const std::string& prefix = {});
  /// First failing check, or nullptr.
  const Check* first_failure() const;
};

}  // namespace poissonz
