#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

  enum class Family { zmod, gf, matrix, upper_tri, product, func_field };

  //! Structural description of a ring, as written in the ring-spec language:
  //!
  //!   ring := "Z(" int ")" | "GF(" int ")" | "M(" int "," ring ")"
  //!         | "UT(" int "," ring ")" | "prod(" ring ("," ring)* ")"
  //!         | "FF(" int ")"
  //!
  //! `param` is n for Z/M/UT, q for GF and p for FF; `children` holds the
  //! base ring of M/UT or the factors of prod.
  struct RingSpec {
    Family                family = Family::zmod;
    std::uint64_t         param  = 0;
    std::vector<RingSpec> children;

    bool operator==(RingSpec const&) const = default;
  };

  //! Syntax only; parameter constraints are checked by validate().
  RingSpec parse_ring_spec(std::string_view text);

  //! Throws Error{invalid_spec} if a parameter constraint is violated.
  void validate(RingSpec const& spec);

  //! Canonical text, e.g. "prod(M(2,GF(2)),GF(2))".
  std::string to_string(RingSpec const& spec);

  //! True iff the spec contains no FF node.
  bool is_enumerable(RingSpec const& spec);

  //! Supported GF sizes other than primes.
  bool is_supported_field_size(std::uint64_t q);

  //! Returns p and k with q = p^k, or {0, 0} if q is not a prime power.
  std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

  bool is_prime(std::uint64_t n);

}  // namespace ringlab
