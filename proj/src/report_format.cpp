#include "mxguard/report_format.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace mxguard {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string Join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string TargetList(const std::vector<FaultTarget>& targets) {
  std::string out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (i != 0) out += ',';
    out += FaultTargetName(targets[i]);
  }
  return out;
}

// Decimal with 4 fractional digits, as a JSON number.
double Round4(double v) { return std::round(v * 10000.0) / 10000.0; }

std::vector<std::pair<std::string, std::string>> ConfigEcho(
    const CampaignConfig& c) {
  return {
      {"scheme", std::to_string(static_cast<int>(c.scheme))},
      {"model", std::string(FaultKindName(c.fault_model.kind()))},
      {"faults", std::to_string(c.fault_model.k())},
      {"targets", TargetList(c.targets)},
      {"l", Join(c.l_values)},
      {"bits", std::to_string(c.modulus_bits)},
      {"k_bits", std::to_string(c.k_bits)},
      {"iterations", std::to_string(c.iterations)},
      {"seed", std::to_string(c.seed)},
      {"modulus_pool", std::to_string(c.modulus_pool)},
  };
}

}  // namespace

std::string FormatRate(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", rate);
  return buf;
}

std::string CampaignToCsv(const CampaignReport& report) {
  std::ostringstream os;
  for (const auto& [key, value] : ConfigEcho(report.config)) {
    os << "# " << key << " = " << value << '\n';
  }
  os << "model,target,l,k,injected,detected,benign,corrupt,detection_rate,"
        "escape_rate\n";
  const auto model = FaultKindName(report.config.fault_model.kind());
  const std::size_t k = report.config.fault_model.k();
  for (const auto& c : report.cells) {
    os << model << ',' << FaultTargetName(c.target) << ',' << c.l << ',' << k
       << ',' << c.injected << ',' << c.detected << ',' << c.accepted_benign
       << ',' << c.accepted_corrupt << ',' << FormatRate(c.detection_rate())
       << ',' << FormatRate(c.escape_rate()) << '\n';
  }
  return os.str();
}

std::string CampaignToJson(const CampaignReport& report) {
  ordered_json config;
  const CampaignConfig& c = report.config;
  config["scheme"] = static_cast<int>(c.scheme);
  config["model"] = FaultKindName(c.fault_model.kind());
  config["faults"] = c.fault_model.k();
  ordered_json targets = ordered_json::array();
  for (const auto t : c.targets) targets.push_back(FaultTargetName(t));
  config["targets"] = targets;
  config["l"] = c.l_values;
  config["bits"] = c.modulus_bits;
  config["k_bits"] = c.k_bits;
  config["iterations"] = c.iterations;
  config["seed"] = c.seed;
  config["modulus_pool"] = c.modulus_pool;

  ordered_json by_target;
  for (const auto& cell : report.cells) {
    ordered_json row;
    row["k"] = c.fault_model.k();
    row["injected"] = cell.injected;
    row["detected"] = cell.detected;
    row["benign"] = cell.accepted_benign;
    row["corrupt"] = cell.accepted_corrupt;
    row["detection_rate"] = Round4(cell.detection_rate());
    row["escape_rate"] = Round4(cell.escape_rate());
    by_target[std::string(FaultTargetName(cell.target))]
             [std::to_string(cell.l)] = row;
  }
  ordered_json doc;
  doc["config"] = config;
  doc["results"][std::string(FaultKindName(c.fault_model.kind()))] = by_target;
  return doc.dump(2) + "\n";
}

std::string CampaignToText(const CampaignReport& report) {
  std::ostringstream os;
  for (const auto& [key, value] : ConfigEcho(report.config)) {
    os << "# " << key << " = " << value << '\n';
  }
  os << std::left << std::setw(8) << "target" << std::right << std::setw(6)
     << "l" << std::setw(10) << "injected" << std::setw(10) << "detected"
     << std::setw(9) << "benign" << std::setw(9) << "corrupt" << std::setw(11)
     << "detect%" << std::setw(10) << "escape%" << '\n';
  for (const auto& c : report.cells) {
    os << std::left << std::setw(8) << FaultTargetName(c.target) << std::right
       << std::setw(6) << c.l << std::setw(10) << c.injected << std::setw(10)
       << c.detected << std::setw(9) << c.accepted_benign << std::setw(9)
       << c.accepted_corrupt << std::fixed << std::setprecision(2)
       << std::setw(11) << c.detection_rate() * 100.0 << std::setw(10)
       << c.escape_rate() * 100.0 << '\n';
  }
  return os.str();
}

std::string BenchToJson(const BenchReport& report) {
  ordered_json doc;
  const BenchConfig& c = report.config;
  doc["config"] = {{"bits", c.modulus_bits},   {"l", c.l_values},
                   {"repetitions", c.repetitions}, {"warmup", c.warmup},
                   {"seed", c.seed},           {"k_bits", c.k_bits}};
  doc["timer_resolution_ns"] = report.timer_resolution_ns;
  doc["pinned"] = report.pinned;
  doc["environment"] = report.environment;
  doc["fit"] = {{"intercept_percent", report.fit.intercept},
                {"slope_percent_per_fraction", report.fit.slope}};
  ordered_json points = ordered_json::array();
  for (const auto& p : report.points) {
    points.push_back({
        {"l", p.l},
        {"unprotected_median_ns", p.unprotected_ns.median},
        {"unprotected_iqr_ns", p.unprotected_ns.iqr()},
        {"protected_median_ns", p.protected_ns.median},
        {"protected_iqr_ns", p.protected_ns.iqr()},
        {"overhead_percent", p.overhead_percent},
        {"fit_residual_percent", p.fit_residual},
    });
  }
  doc["points"] = points;
  return doc.dump(2) + "\n";
}

std::string BenchToText(const BenchReport& report) {
  std::ostringstream os;
  const BenchConfig& c = report.config;
  os << "# bits = " << c.modulus_bits << "\n# l = " << Join(c.l_values)
     << "\n# repetitions = " << c.repetitions << "\n# warmup = " << c.warmup
     << "\n# seed = " << c.seed << "\n# k_bits = " << c.k_bits
     << "\n# environment = " << report.environment
     << "\n# timer resolution = " << std::fixed << std::setprecision(1)
     << report.timer_resolution_ns << " ns"
     << "\n# medians of wall-clock time per call; tolerance bands are "
        "engineering judgement, hardware dependent\n";
  os << std::right << std::setw(6) << "l" << std::setw(18) << "unprotected(us)"
     << std::setw(16) << "protected(us)" << std::setw(12) << "overhead%"
     << std::setw(14) << "iqr(us)" << std::setw(12) << "residual%" << '\n';
  for (const auto& p : report.points) {
    os << std::setw(6) << p.l << std::setprecision(1) << std::setw(18)
       << p.unprotected_ns.median / 1000.0 << std::setw(16)
       << p.protected_ns.median / 1000.0 << std::setprecision(2)
       << std::setw(12) << p.overhead_percent << std::setprecision(1)
       << std::setw(14) << p.protected_ns.iqr() / 1000.0
       << std::setprecision(2) << std::setw(12) << p.fit_residual << '\n';
  }
  os << "# affine fit: overhead% = " << std::setprecision(3)
     << report.fit.intercept << " + " << report.fit.slope << " * l/bits\n";
  return os.str();
}

}  // namespace mxguard
