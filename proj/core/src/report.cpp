#include "poissonz/report.hpp"

#include <algorithm>

namespace poissonz {

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Check& VerificationReport::add(std::string name, std::string expected, std::string computed, bool ok,
                               std::string witness) {
  checks.push_back({std::move(name), std::move(expected), std::move(computed), ok, std::move(witness)});
  return checks.back();
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

}  // namespace poissonz
