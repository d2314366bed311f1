#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "emit.hpp"
#include "poissonz/pairs.hpp"
#include "suite.hpp"

namespace {

using namespace poissonz;
using namespace poissonz::cli;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const char* kKeyHelp = R"(Pair keys:
  AI:n        (sl_n, so_n)
  AII:n       (sl_2n, sp_2n)
  AIII:p,q    (sl_{p+q}, s(gl_p + gl_q))
  BDI:p,q     (so_{p+q}, so_p + so_q)
  CII:p,q     (sp_{2p+2q}, sp_2p + sp_2q)
  DIIIodd:n   (so_2n, so_{2n-1}), same as BDI:2n-1,1
  DBL:h       (h + h, h) for h = sl3, so5, sp4, ..., also DBL:sl:3
Chains join keys with '>', each level a pair on the previous fixed-point subalgebra,
for example "BDI:4,1>BDI:2,2".
Exit status: 0 all checks pass, 1 a check failed, 2 usage error.)";

struct Common {
  std::string mode = "auto";
  std::uint64_t seed = 1;
  std::size_t samples = 5;
  long height = kDefaultHeight;
  std::size_t jobs = 1;
  std::string output = "text";
  std::string out_file;
  std::string checks;
};

void add_common(CLI::App* app, Common& c, bool suite_options) {
  app->add_option("--output", c.output, "Report format")->check(CLI::IsMember({"json", "text", "csv"}));
  app->add_option("--out", c.out_file, "Write the report to this file instead of stdout");
  if (!suite_options) return;
  app->add_option("--mode", c.mode, "symbolic, sampled, or auto (symbolic up to dim 15)")
      ->check(CLI::IsMember({"auto", "symbolic", "sampled"}));
  app->add_option("--seed", c.seed, "Random seed; falls back to POISSONZ_SEED, then 1");
  app->add_option("--samples", c.samples, "Random points per sampled check")->check(CLI::PositiveNumber);
  app->add_option("--height", c.height, "Sample coordinates lie in [-height, height]")->check(CLI::PositiveNumber);
  app->add_option("--jobs", c.jobs, "Check groups run in parallel")->check(CLI::PositiveNumber);
  app->add_option("--checks", c.checks, "Comma list of check groups, 'all' or 'none'");
}

RunConfig make_config(const Common& c, bool seed_given) {
  RunConfig cfg;
  if (c.mode == "symbolic") cfg.mode = Mode::Symbolic;
  if (c.mode == "sampled") cfg.mode = Mode::Sampled;
  cfg.seed = c.seed;
  if (!seed_given) {
    if (const char* env = std::getenv("POISSONZ_SEED")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (!*env || *end) throw Error(std::string("POISSONZ_SEED is not an integer: ") + env);
      cfg.seed = v;
    }
  }
  cfg.samples = c.samples;
  cfg.height = c.height;
  cfg.jobs = c.jobs;
  if (!c.checks.empty()) cfg.groups = parse_groups(c.checks);
  return cfg;
}

RunInfo make_info(const std::string& command, const Common& c, const RunConfig& cfg) {
  return {command, c.mode, cfg.seed, cfg.samples, cfg.height};
}

// Stdout unless a file was requested.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    os = &file;
  }
};

SuiteResult guarded(const std::function<SuiteResult()>& f, const std::string& label, const RunConfig& cfg) {
  try {
    return f();
  } catch (const std::exception& e) {
    SuiteResult r;
    r.report.pair = label;
    r.report.seed = cfg.seed;
    r.report.samples = cfg.samples;
    r.mode = cfg.mode ? to_string(*cfg.mode) : "auto";
    r.report.add("suite", "completes", "error", false, e.what());
    return r;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson-commutative subalgebras attached to symmetric pairs, verified in exact arithmetic"};
  app.footer(kKeyHelp);
  app.require_subcommand(1);

  Common list_opts;
  auto* list = app.add_subcommand("list", "List the registered pairs");
  add_common(list, list_opts, false);

  Common verify_opts;
  std::vector<std::string> keys, pair_flags;
  std::string verify_chain;
  auto* verify = app.add_subcommand("verify", "Run the verification suite on pairs");
  verify->add_option("keys", keys, "Pair keys");
  verify->add_option("--pair", pair_flags, "Pair key (repeatable)");
  verify->add_option("--chain", verify_chain, "Also verify this chain");
  add_common(verify, verify_opts, true);

  Common chain_opts;
  std::string chain_text;
  auto* chain = app.add_subcommand("chain", "Build and verify a chain of symmetric pairs");
  chain->add_option("chain", chain_text, "Keys joined by '>'")->required();
  add_common(chain, chain_opts, true);

  Common pencil_opts;
  std::string pencil_file;
  auto* pencil = app.add_subcommand("pencil", "Analyse a pencil of skew-symmetric forms read from a file");
  pencil->add_option("file", pencil_file, "n, then A and B row-major; '#' starts a comment")->required();
  add_common(pencil, pencil_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) {
      Sink sink(list_opts.out_file);
      for (const auto& k : registered_pairs()) *sink.os << k << "\n";
      return kExitPass;
    }
    if (*verify) {
      keys.insert(keys.end(), pair_flags.begin(), pair_flags.end());
      if (keys.empty() && verify_chain.empty()) throw Error("verify needs at least one pair key or --chain");
      RunConfig cfg = make_config(verify_opts, verify->count("--seed") > 0);
      for (const auto& k : keys) parse_pair_key(k);
      if (!verify_chain.empty())
        for (const auto& k : parse_chain(verify_chain)) parse_pair_key(k);
      OutputFormat fmt = parse_format(verify_opts.output);
      Sink sink(verify_opts.out_file);
      std::vector<SuiteResult> results;
      for (const auto& k : keys) results.push_back(guarded([&] { return run_suite(k, cfg); }, k, cfg));
      if (!verify_chain.empty())
        results.push_back(guarded([&] { return run_chain(verify_chain, cfg); }, verify_chain, cfg));
      emit_suites(*sink.os, fmt, make_info("verify", verify_opts, cfg), results);
      for (const auto& r : results)
        if (!r.report.pass()) return kExitFail;
      return kExitPass;
    }
    if (*chain) {
      RunConfig cfg = make_config(chain_opts, chain->count("--seed") > 0);
      for (const auto& k : parse_chain(chain_text)) parse_pair_key(k);
      OutputFormat fmt = parse_format(chain_opts.output);
      Sink sink(chain_opts.out_file);
      std::vector<SuiteResult> results{guarded([&] { return run_chain(chain_text, cfg); }, chain_text, cfg)};
      emit_suites(*sink.os, fmt, make_info("chain", chain_opts, cfg), results);
      return results.front().report.pass() ? kExitPass : kExitFail;
    }
    if (*pencil) {
      OutputFormat fmt = parse_format(pencil_opts.output);
      Pencil p = read_pencil_file(pencil_file);
      Sink sink(pencil_opts.out_file);
      PencilSummary s;
      try {
        s = run_pencil(p, pencil_file);
      } catch (const std::exception& e) {
        std::cerr << "poissonz: " << e.what() << "\n";
        return kExitFail;
      }
      emit_pencil(*sink.os, fmt, {"pencil", "exact", 0, 0, 0}, s);
      return s.report.pass() ? kExitPass : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "poissonz: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
