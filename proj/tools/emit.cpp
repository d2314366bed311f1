#include "emit.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace poissonz::cli {

namespace {

using Json = nlohmann::ordered_json;

Json checks_json(const VerificationReport& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks)
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass},
                   {"witness", c.witness}});
  return arr;
}

Json header(const RunInfo& info) {
  return {{"schema", kSchema},
          {"command", info.command},
          {"config", {{"mode", info.mode}, {"seed", info.seed}, {"samples", info.samples}, {"height", info.height}}}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<int> sorted_degrees(const SuiteResult& r) {
  std::vector<int> d;
  for (const auto& g : r.generators) d.push_back(g.degree);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

void text_checks(std::ostream& os, const VerificationReport& r) {
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [expected " << c.expected << "; computed " << c.computed
       << "]\n";
    if (!c.pass && !c.witness.empty()) os << "      witness: " << c.witness << "\n";
  }
  std::size_t ok = 0;
  for (const auto& c : r.checks) ok += c.pass;
  os << "result: " << (r.pass() ? "PASS" : "FAIL") << " (" << ok << "/" << r.checks.size() << " checks)\n";
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  throw Error("unknown output format '" + s + "'");
}

void emit_suites(std::ostream& os, OutputFormat f, const RunInfo& info, const std::vector<SuiteResult>& results) {
  bool all_pass = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.report.pass(); });
  switch (f) {
    case OutputFormat::Json: {
      Json doc = header(info);
      Json reps = Json::array();
      for (const auto& r : results) {
        Json gens = Json::array();
        for (const auto& g : r.generators) {
          Json row = {{"name", g.name}, {"degree", g.degree}};
          row["bidegree"] = g.bideg ? Json::array({g.bideg->d0, g.bideg->d1}) : Json(nullptr);
          gens.push_back(std::move(row));
        }
        reps.push_back({{"pair", r.report.pair},
                        {"mode", r.mode},
                        {"seed", r.report.seed},
                        {"samples", r.report.samples},
                        {"pass", r.report.pass()},
                        {"checks", checks_json(r.report)},
                        {"generators", std::move(gens)},
                        {"notes", r.notes}});
      }
      doc["reports"] = std::move(reps);
      doc["pass"] = all_pass;
      os << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::Text: {
      for (const auto& r : results) {
        os << "== " << r.report.pair << " (mode " << r.mode << ", seed " << r.report.seed << ", samples "
           << r.report.samples << ") ==\n";
        text_checks(os, r.report);
        if (!r.generators.empty()) {
          os << "generators:";
          for (const auto& g : r.generators) os << " " << g.name << "[" << g.degree << "]";
          os << "\n";
        }
        for (const auto& n : r.notes) os << "note: " << n << "\n";
      }
      os << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
      break;
    }
    case OutputFormat::Csv: {
      os << "kind,report,generator,d0,d1,degree\n";
      for (const auto& r : results) {
        for (const auto& g : r.generators) {
          os << "generator," << csv_field(r.report.pair) << "," << csv_field(g.name) << ",";
          if (g.bideg) os << g.bideg->d0 << "," << g.bideg->d1;
          else os << ",";
          os << "," << g.degree << "\n";
        }
        os << "degrees";
        for (int d : sorted_degrees(r)) os << "," << d;
        os << "\n";
      }
      break;
    }
  }
}

void emit_pencil(std::ostream& os, OutputFormat f, const RunInfo& info, const PencilSummary& p) {
  const auto& jk = p.jk;
  std::vector<std::string> finite;
  for (const auto& r : jk.singular.finite) finite.push_back(to_string(r));
  switch (f) {
    case OutputFormat::Json: {
      Json doc = header(info);
      Json kd = Json::object();
      for (const auto& [m, d] : jk.kernel_dims) kd[m] = d;
      doc["pencil"] = {{"source", p.report.pair},
                       {"n", p.n},
                       {"generic_rank", p.generic_rank},
                       {"d_prime", jk.d_prime},
                       {"dim_L", jk.dim_L},
                       {"sum_k", jk.sum_k},
                       {"singular_finite", finite},
                       {"singular_at_infinity", jk.singular.at_infinity},
                       {"non_rational", jk.singular.non_rational},
                       {"kernel_dims", kd}};
      doc["checks"] = checks_json(p.report);
      doc["pass"] = p.report.pass();
      os << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::Text: {
      os << "== pencil " << p.report.pair << " ==\n";
      os << "n = " << p.n << ", generic rank = " << p.generic_rank << ", d' = " << jk.d_prime << ", dim L = " << jk.dim_L
         << ", sum of k_i = " << jk.sum_k << "\n";
      os << "singular members:";
      for (const auto& s : finite) os << " " << s;
      if (jk.singular.at_infinity) os << " inf";
      if (jk.singular.non_rational) os << " (plus irrational ones)";
      os << "\n";
      text_checks(os, p.report);
      break;
    }
    case OutputFormat::Csv: {
      os << "quantity,value\n";
      os << "n," << p.n << "\ngeneric_rank," << p.generic_rank << "\nd_prime," << jk.d_prime << "\ndim_L," << jk.dim_L
         << "\nsum_k," << jk.sum_k << "\n";
      for (const auto& [m, d] : jk.kernel_dims) os << "kernel_dim " << csv_field(m) << "," << d << "\n";
      break;
    }
  }
}

}  // namespace poissonz::cli
