#pragma once

#include <string>
#include <vector>

#include "ringlab/check_result.hpp"

namespace ringlab {

  //! One registry entry.
  struct CheckInfo {
    std::string id;
    std::string anchor;  // the statement being checked, quoted
    std::string module;  // library module whose code the check exercises
  };

  //! All registered checks, ordered by id.
  std::vector<CheckInfo> const& registry();
  bool                          is_registered(std::string const& check_id);

  std::vector<std::string> default_catalog();

  //! Reads a catalog file: either a JSON array of spec strings or one spec
  //! per line ('#' starts a comment). Specs are parsed and normalized;
  //! throws Error{parse} / Error{invalid_spec} on bad entries.
  std::vector<std::string> load_catalog(std::string const& path);

  struct Report {
    std::vector<std::string> catalog;
    std::vector<CheckResult> results;  // ordered by (check_id, ring)

    bool any_failed() const;
  };

  //! Runs one check over the catalog. Instance checks tied to a single ring
  //! report one result; others report one result per catalog ring. Throws
  //! Error{unknown_check} for unregistered ids.
  Report run_check(std::string const& check_id, std::vector<std::string> const& catalog);

  //! Runs every registered check over the catalog.
  Report run_suite(std::vector<std::string> const& catalog, bool parallel);

  //! 0 if no result failed, 1 otherwise.
  int exit_code(Report const& report);

  //! JSON report; `with_timing` false drops the "ms" values (set to null)
  //! so that runs can be compared byte for byte.
  std::string to_json(Report const& report, bool with_timing = true);
  //! Fixed-width text table, one line per result.
  std::string to_table(Report const& report);

}  // namespace ringlab
