#ifndef MXGUARD_REPORT_FORMAT_HPP_
#define MXGUARD_REPORT_FORMAT_HPP_

#include <string>

#include "mxguard/benchmark.hpp"
#include "mxguard/campaign.hpp"

namespace mxguard {

// Campaign reports.
//
// CSV: '#'-prefixed configuration lines, then the header
//   model,target,l,k,injected,detected,benign,corrupt,detection_rate,escape_rate
// and one row per cell. Rates carry 4 fractional digits.
// JSON: {"config": {...}, "results": {model: {target: {l: {...}}}}}.
// Text: the configuration echo and an aligned table.
std::string CampaignToCsv(const CampaignReport& report);
std::string CampaignToJson(const CampaignReport& report);
std::string CampaignToText(const CampaignReport& report);

// Benchmark reports: JSON, and an aligned table with the columns
// l, unprotected, protected, overhead%.
std::string BenchToJson(const BenchReport& report);
std::string BenchToText(const BenchReport& report);

// "0.9990" style fixed-point rendering with 4 fractional digits.
std::string FormatRate(double rate);

}  // namespace mxguard

#endif  // MXGUARD_REPORT_FORMAT_HPP_
