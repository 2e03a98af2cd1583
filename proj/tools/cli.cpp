#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mxguard/benchmark.hpp"
#include "mxguard/campaign.hpp"
#include "mxguard/errors.hpp"
#include "mxguard/fault_injection.hpp"
#include "mxguard/protocol_demos.hpp"
#include "mxguard/report_format.hpp"

namespace mxguard::cli {

namespace {

struct SimulateOptions {
  std::string model = "total-random";
  std::vector<std::string> targets{"x1", "y1", "c1", "c2", "c3"};
  std::vector<std::size_t> l_values{10, 20, 50, 128};
  std::size_t bits = 2048;
  std::size_t k_bits = 50;
  std::size_t iterations = 1000;
  std::uint64_t seed = 0;
  std::size_t faults = 0;
  int scheme = 2;
  std::string format = "text";
  std::size_t threads = 1;
  std::size_t moduli = 16;
  std::string out;
};

struct BenchOptions {
  std::vector<std::size_t> l_values{10, 20, 50, 128, 256};
  std::size_t bits = 2048;
  std::size_t k_bits = 50;
  std::size_t repetitions = 1000;
  std::size_t warmup = 5;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

struct DemoOptions {
  std::string fixture;
  std::string fixture_dir = MXGUARD_FIXTURE_DIR;
  std::size_t l = 128;
  std::size_t k_bits = 50;
  std::uint64_t seed = 0;
  std::string message;
  std::string totient_source = "phi";
  std::string inject;
  std::size_t inject_step = 0;
  std::string model = "single-bit";
  std::size_t faults = 0;
  std::string out;
};

FaultModel BuildModel(const std::string& name, std::size_t faults) {
  const auto kind = ParseFaultKind(name);
  if (!kind) throw InvalidParameterError("--model: unknown model '" + name + "'");
  const bool needs_k =
      *kind == FaultKind::kKRandomFlip || *kind == FaultKind::kKBurstFlip;
  if (needs_k && faults == 0) {
    throw InvalidParameterError("--faults <k> is required for --model " + name);
  }
  switch (*kind) {
    case FaultKind::kNone: return FaultModel::None();
    case FaultKind::kTotalRandom: return FaultModel::TotalRandom();
    case FaultKind::kSingleBitFlip: return FaultModel::SingleBitFlip();
    case FaultKind::kKRandomFlip: return FaultModel::KRandomFlip(faults);
    case FaultKind::kKBurstFlip: return FaultModel::KBurstFlip(faults);
  }
  return FaultModel::None();
}

FaultTarget BuildTarget(const std::string& name) {
  const auto t = ParseFaultTarget(name);
  if (!t) throw InvalidParameterError("--targets: unknown target '" + name + "'");
  return *t;
}

// Writes to --out when given, else to `out`.
void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameterError("--out: cannot write " + path);
  file << text;
}

int RunSimulate(const SimulateOptions& o, std::ostream& out) {
  CampaignConfig config;
  config.modulus_bits = o.bits;
  config.k_bits = o.k_bits;
  config.l_values = o.l_values;
  config.fault_model = BuildModel(o.model, o.faults);
  config.targets.clear();
  for (const auto& t : o.targets) config.targets.push_back(BuildTarget(t));
  config.iterations = o.iterations;
  config.seed = o.seed;
  config.scheme = o.scheme == 1 ? Scheme::kFull : Scheme::kPartial;
  config.threads = o.threads;
  config.modulus_pool = o.moduli;
  config.Validate();

  const CampaignReport report = RunCampaign(config);
  std::string text;
  if (o.format == "csv") {
    text = CampaignToCsv(report);
  } else if (o.format == "json") {
    text = CampaignToJson(report);
  } else {
    text = CampaignToText(report);
  }
  Emit(text, o.out, out);
  return kExitOk;
}

int RunBenchCommand(const BenchOptions& o, std::ostream& out) {
  BenchConfig config;
  config.modulus_bits = o.bits;
  config.l_values = o.l_values;
  config.repetitions = o.repetitions;
  config.warmup = o.warmup;
  config.seed = o.seed;
  config.k_bits = o.k_bits;
  const BenchReport report = RunBench(config);
  Emit(o.format == "json" ? BenchToJson(report) : BenchToText(report), o.out,
       out);
  return kExitOk;
}

StepHooks BuildDemoHooks(const DemoOptions& o, Rng& rng) {
  StepHooks hooks;
  if (o.inject.empty()) return hooks;
  hooks.resize(o.inject_step + 1);
  hooks[o.inject_step] =
      MakeHooks(BuildModel(o.model, o.faults), BuildTarget(o.inject), rng);
  return hooks;
}

void EchoDemoHeader(std::ostringstream& os, const std::string& demo,
                    const std::filesystem::path& fixture,
                    const DemoOptions& o) {
  os << "# demo = " << demo << "\n# fixture = " << fixture.filename().string()
     << "\n# l = " << o.l << "\n# k_bits = " << o.k_bits
     << "\n# seed = " << o.seed;
  if (!o.inject.empty()) {
    os << "\n# inject = " << o.inject << " at step " << o.inject_step
       << " (model " << o.model << ", faults " << o.faults << ")";
  }
  os << '\n';
}

void PrintSteps(std::ostringstream& os, const std::vector<DemoStep>& steps) {
  for (const auto& s : steps) {
    os << "verdict " << s.name << ' '
       << (s.verdict.accepted() ? "ACCEPTED" : "FAULT_DETECTED");
    if (!s.verdict.accepted()) os << ' ' << MismatchName(s.verdict.detail());
    os << '\n';
  }
}

int RunDemo(const std::string& which, const DemoOptions& o, std::ostream& out,
            std::ostream& err) {
  const std::string fixture_name =
      o.fixture.empty() ? (which == "dh" ? "23" : "3233") : o.fixture;
  const std::filesystem::path path =
      std::filesystem::path(o.fixture_dir) / (which + "_" + fixture_name + ".txt");
  Rng rng(o.seed);
  Rng fault_rng(Rng::Derive(o.seed, {kFaultStream}));
  const StepHooks hooks = BuildDemoHooks(o, fault_rng);

  std::ostringstream os;
  if (which == "dh") {
    os << "# totient = P - 1\n";
    const DhFixture f = LoadDhFixture(path);
    EchoDemoHeader(os, which, path, o);
    os << "prime " << f.params.prime() << "\ngenerator "
       << f.params.generator() << '\n';
    try {
      const DhResult r =
          DhExchange(f.params, f.secret_a, f.secret_b, o.l, rng, o.k_bits, hooks);
      os << "public_a " << r.public_a << "\npublic_b " << r.public_b
         << "\nshared_a " << r.shared_a << "\nshared_b " << r.shared_b << '\n';
      PrintSteps(os, r.steps);
    } catch (const ProtocolAbort& abort) {
      Emit(os.str(), o.out, out);
      err << "abort: " << abort.what() << '\n';
      return kExitFaultDetected;
    }
  } else {
    const RsaFixture f = LoadRsaFixture(path);
    const TotientSource source = o.totient_source == "key-multiple"
                                     ? TotientSource::kKeyMultiple
                                     : TotientSource::kTotient;
    if (o.totient_source != "phi" && o.totient_source != "key-multiple") {
      throw InvalidParameterError("--totient-source must be phi or key-multiple");
    }
    const Nat message =
        o.message.empty() ? f.message : Nat::FromDecimal(o.message);
    EchoDemoHeader(os, which, path, o);
    os << "# totient_source = " << o.totient_source << '\n';
    os << "modulus " << f.keys.modulus() << "\ne " << f.keys.public_exponent()
       << "\nmessage " << message << '\n';
    try {
      const RsaResult r =
          RsaRoundtrip(f.keys, message, o.l, rng, source, o.k_bits, hooks);
      os << "ciphertext " << r.ciphertext << "\nrecovered " << r.recovered
         << '\n';
      PrintSteps(os, r.steps);
    } catch (const ProtocolAbort& abort) {
      Emit(os.str(), o.out, out);
      err << "abort: " << abort.what() << '\n';
      return kExitFaultDetected;
    }
  }
  Emit(os.str(), o.out, out);
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "mxguard: fault-detecting modular exponentiation, fault-injection "
      "campaigns and overhead benchmarks"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand(
      "simulate",
      "Monte-Carlo error-coverage campaign. Typical grids: "
      "total-random / single-bit (targets x1, y1, c1..c3, l = 10,20,50,128), "
      "k-random and k-burst (--faults 3..128, l = 20,50).");
  simulate->add_option("--model", sim.model,
                       "Fault model: none, total-random, single-bit, k-random, "
                       "k-burst")
      ->capture_default_str();
  simulate->add_option("--targets", sim.targets,
                       "Comma list of x1|y1|x2|y2|c1|c2|c3 "
                       "(c1 = x1,y1; c2 = x2,y2; c3 = all four)")
      ->delimiter(',')
      ->capture_default_str();
  simulate->add_option("--l", sim.l_values,
                       "Comma list of partial-recomputation windows")
      ->delimiter(',')
      ->capture_default_str();
  simulate->add_option("--bits", sim.bits, "Modulus / base / exponent width")
      ->capture_default_str();
  simulate->add_option("--k-bits", sim.k_bits, "Encoding coefficient width")
      ->capture_default_str();
  simulate->add_option("--iterations", sim.iterations, "Trials per cell")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Campaign seed")
      ->capture_default_str();
  simulate->add_option("--faults", sim.faults,
                       "Number of flipped bits k for k-random / k-burst")
      ->capture_default_str();
  simulate->add_option("--scheme", sim.scheme,
                       "1 = full recomputation, 2 = partial recomputation")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  simulate->add_option("--format", sim.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  simulate->add_option("--threads", sim.threads,
                       "Worker threads; output is identical for any value")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--moduli", sim.moduli,
                       "RSA moduli generated up front and shared by all "
                       "trials (0 = fresh modulus per trial)")
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "Write the report to this path");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench",
      "Wall-clock overhead of the partial scheme over the unprotected "
      "exponentiation for each l.");
  bench_cmd->add_option("--l", bench.l_values, "Comma list of windows")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--bits", bench.bits, "Operand width")
      ->capture_default_str();
  bench_cmd->add_option("--k-bits", bench.k_bits, "Encoding coefficient width")
      ->capture_default_str();
  bench_cmd->add_option("--repetitions", bench.repetitions,
                        "Timed calls per flow (>= 10)")
      ->capture_default_str();
  bench_cmd->add_option("--warmup", bench.warmup, "Untimed warmup rounds")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Input seed")
      ->capture_default_str();
  bench_cmd->add_option("--format", bench.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Write the report to this path");

  DemoOptions demo;
  std::string demo_kind;
  auto* demo_cmd = app.add_subcommand(
      "demo",
      "Protected Diffie-Hellman exchange or RSA round trip from a fixture. "
      "Exit status 1 when a fault is detected.");
  demo_cmd->add_option("protocol", demo_kind, "dh or rsa")
      ->required()
      ->check(CLI::IsMember({"dh", "rsa"}));
  demo_cmd->add_option("--fixture", demo.fixture,
                       "Fixture name: dh 23 | 2048, rsa 3233 | 2048 "
                       "(default 23 for dh, 3233 for rsa)");
  demo_cmd->add_option("--fixture-dir", demo.fixture_dir, "Fixture directory")
      ->capture_default_str();
  demo_cmd->add_option("--l", demo.l, "Partial-recomputation window")
      ->capture_default_str();
  demo_cmd->add_option("--k-bits", demo.k_bits, "Encoding coefficient width")
      ->capture_default_str();
  demo_cmd->add_option("--seed", demo.seed, "Encoding seed")
      ->capture_default_str();
  demo_cmd->add_option("--message", demo.message,
                       "RSA message in decimal (default: fixture message)");
  demo_cmd->add_option("--totient-source", demo.totient_source,
                       "RSA exponent encoding: phi or key-multiple (e*d - 1)")
      ->check(CLI::IsMember({"phi", "key-multiple"}))
      ->capture_default_str();
  demo_cmd->add_option("--inject", demo.inject,
                       "Inject a fault into this target (x1..c3)");
  demo_cmd->add_option("--inject-step", demo.inject_step,
                       "Index of the exponentiation to fault (0-based)")
      ->capture_default_str();
  demo_cmd->add_option("--model", demo.model, "Fault model for --inject")
      ->capture_default_str();
  demo_cmd->add_option("--faults", demo.faults, "k for k-random / k-burst")
      ->capture_default_str();
  demo_cmd->add_option("--out", demo.out, "Write the transcript to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return RunSimulate(sim, out);
    if (bench_cmd->parsed()) return RunBenchCommand(bench, out);
    if (demo_cmd->parsed()) return RunDemo(demo_kind, demo, out, err);
  } catch (const InvalidParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mxguard::cli
