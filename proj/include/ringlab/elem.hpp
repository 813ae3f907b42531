#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "ringlab/ratfunc.hpp"

namespace ringlab {

  //! Canonical encoding of one ring element.
  //!
  //! The layout is fixed by the ring: every Z(n) or GF(q) leaf of the ring
  //! tree contributes one digit (a residue, or the packed polynomial-basis
  //! coordinates sum c_i p^i for GF(p^k)), every FF(2) leaf contributes one
  //! fraction. Matrix rings store their entries row-major (upper triangle
  //! only for UT), products concatenate their factors. Two elements are
  //! equal iff their encodings are identical, and the defaulted ordering
  //! (lexicographic, digits first) is the canonical order used everywhere.
  struct Elem {
    std::vector<std::int32_t> digits;
    std::vector<RatFunc>      fractions;

    bool                 operator==(Elem const&) const = default;
    std::strong_ordering operator<=>(Elem const&) const = default;
  };

}  // namespace ringlab
