#include "witt/report.hpp"

namespace witt {

static nlohmann::ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return nlohmann::ordered_json(v.get_si());
  return nlohmann::ordered_json(v.get_str());
}

nlohmann::ordered_json report_record(std::size_t index, char family,
                                     const std::vector<std::string>& poly_texts,
                                     const Verdict& v,
                                     std::optional<long long> millis) {
  nlohmann::ordered_json j;
  j["index"] = index;
  j["family"] = std::string(1, family);
  j["polys"] = poly_texts;
  j["verdict"] = v.independent ? "independent" : "undetermined";
  j["level"] = v.level;
  if (!v.independent) {
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& vec : v.kernel_basis) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (const auto& c : vec) row.push_back(json_int(c));
      basis.push_back(std::move(row));
    }
    j["kernel_basis"] = std::move(basis);
    j["tested_levels"] = v.tested_levels;
    if (!v.untested_levels.empty()) j["untested_levels"] = v.untested_levels;
    j["diagnostic"] = v.diagnostic;
  }
  if (millis) j["millis"] = *millis;
  return j;
}

nlohmann::ordered_json report_skipped(std::size_t index,
                                      const std::string& diagnostic) {
  nlohmann::ordered_json j;
  j["index"] = index;
  j["skipped"] = true;
  j["diagnostic"] = diagnostic;
  return j;
}

void tally(ReportTotals& t, const Verdict& v) {
  ++t.total;
  if (v.independent) {
    ++t.independent;
    if (t.independent_by_level.size() <= v.level)
      t.independent_by_level.resize(v.level + 1, 0);
    ++t.independent_by_level[v.level];
  } else {
    ++t.undetermined;
    if (!v.untested_levels.empty()) ++t.guard_tripped;
  }
}

nlohmann::ordered_json report_summary(const ReportTotals& t,
                                      const nlohmann::ordered_json& config) {
  nlohmann::ordered_json j;
  j["summary"] = true;
  j["schema"] = "indep-report";
  j["version"] = 1;
  j["config"] = config;
  j["total"] = t.total + t.skipped;
  j["independent"] = t.independent;
  nlohmann::ordered_json by_level = nlohmann::ordered_json::object();
  for (std::size_t l = 0; l < t.independent_by_level.size(); ++l)
    by_level[std::to_string(l)] = t.independent_by_level[l];
  j["independent_by_level"] = std::move(by_level);
  j["undetermined"] = t.undetermined;
  j["guard_tripped"] = t.guard_tripped;
  j["skipped"] = t.skipped;
  return j;
}

}  // namespace witt
