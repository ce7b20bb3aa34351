#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "witt/indep.hpp"

namespace witt {

// One JSONL record per sample. Kernel entries are JSON integers when they
// fit 64 bits, decimal strings otherwise. The optional millis field is the
// only non-deterministic part of a report; leave it unset for byte-stable
// output.
nlohmann::ordered_json report_record(std::size_t index, char family,
                                     const std::vector<std::string>& poly_texts,
                                     const Verdict& v,
                                     std::optional<long long> millis);

nlohmann::ordered_json report_skipped(std::size_t index,
                                      const std::string& diagnostic);

struct ReportTotals {
  std::size_t total = 0;
  std::size_t independent = 0;
  std::size_t undetermined = 0;
  std::size_t guard_tripped = 0;
  std::size_t skipped = 0;
  std::vector<std::size_t> independent_by_level;  // index = level
};

void tally(ReportTotals& t, const Verdict& v);

// Trailing summary line; config is echoed verbatim for reproducibility.
nlohmann::ordered_json report_summary(const ReportTotals& t,
                                      const nlohmann::ordered_json& config);

}  // namespace witt
