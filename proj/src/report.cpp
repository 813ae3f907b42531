#include <cstdio>

#include <json.hpp>

#include "ringlab/harness.hpp"

namespace ringlab {

  std::string to_json(Report const& report, bool with_timing) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["version"] = 1;
    doc["catalog"] = report.catalog;
    doc["results"] = ordered_json::array();
    for (auto const& r : report.results) {
      ordered_json entry;
      entry["check_id"]       = r.check_id;
      entry["ring"]           = r.ring;
      entry["verdict"]        = r.verdict_text();
      entry["sub_assertions"] = ordered_json::array();
      for (auto const& s : r.sub_assertions) {
        entry["sub_assertions"].push_back(
            ordered_json{{"name", s.name}, {"ok", s.ok}, {"witness", s.witness}});
      }
      entry["predicted"] = r.predicted ? ordered_json(*r.predicted) : ordered_json(nullptr);
      entry["observed"]  = r.observed ? ordered_json(*r.observed) : ordered_json(nullptr);
      entry["ms"]        = with_timing ? ordered_json(r.ms) : ordered_json(nullptr);
      doc["results"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
  }

  std::string to_table(Report const& report) {
    std::string out;
    char        line[512];
    std::snprintf(line, sizeof line, "%-11s %-36s %-28s %9s\n", "check", "ring", "verdict", "ms");
    out += line;
    std::size_t pass = 0, fail = 0, skipped = 0;
    for (auto const& r : report.results) {
      std::snprintf(line, sizeof line, "%-11s %-36s %-28s %9.1f\n", r.check_id.c_str(),
                    r.ring.c_str(), r.verdict_text().c_str(), r.ms);
      out += line;
      for (auto const& s : r.sub_assertions) {
        if (!s.ok && r.failed()) {
          out += "    failed: " + s.name;
          if (!s.witness.empty()) {
            out += "  [" + s.witness + "]";
          }
          out += "\n";
        }
      }
      pass += r.passed();
      fail += r.failed();
      skipped += r.verdict == VerdictKind::skipped;
    }
    std::snprintf(line, sizeof line, "%zu results: %zu pass, %zu fail, %zu skipped\n",
                  report.results.size(), pass, fail, skipped);
    return out + line;
  }

}  // namespace ringlab
