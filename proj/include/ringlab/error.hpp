#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

  //! Category of a failure raised by the library.
  enum class ErrorCode {
    parse,             // malformed ring spec, element or subset expression
    invalid_spec,      // well-formed spec violating a parameter constraint
    not_enumerable,    // brute-force operation on an infinite ring
    too_large,         // ring exceeds the size limit of the requested operation
    domain,            // arithmetic error (division by a non-unit, dimension mismatch)
    hypothesis,        // precondition of a decision procedure not met
    unknown_check,     // harness lookup failure
    internal           // consistency check failed
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

}  // namespace ringlab
