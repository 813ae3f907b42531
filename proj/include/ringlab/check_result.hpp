#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ringlab {

  struct SubAssertion {
    std::string name;
    bool        ok = true;
    std::string witness;  // element expression(s) replaying a violation
  };

  enum class VerdictKind { pass, fail, skipped };

  //! Outcome of one registry check on one ring.
  struct CheckResult {
    std::string                check_id;
    std::string                ring;
    VerdictKind                verdict = VerdictKind::pass;
    std::string                skip_reason;
    std::vector<SubAssertion>  sub_assertions;
    std::optional<std::string> predicted;
    std::optional<std::string> observed;
    double                     ms = 0.0;

    //! Records a sub-assertion and returns `ok`.
    bool expect(std::string name, bool ok, std::string witness = {}) {
      sub_assertions.push_back({std::move(name), ok, std::move(witness)});
      if (!ok && verdict != VerdictKind::skipped) {
        verdict = VerdictKind::fail;
      }
      return ok;
    }

    void skip(std::string reason) {
      verdict     = VerdictKind::skipped;
      skip_reason = std::move(reason);
    }

    bool passed() const {
      return verdict == VerdictKind::pass;
    }
    bool failed() const {
      return verdict == VerdictKind::fail;
    }

    //! "pass", "fail" or "skipped(<reason>)".
    std::string verdict_text() const {
      switch (verdict) {
        case VerdictKind::pass:
          return "pass";
        case VerdictKind::fail:
          return "fail";
        case VerdictKind::skipped:
          return "skipped(" + skip_reason + ")";
      }
      return "?";
    }
  };

}  // namespace ringlab
