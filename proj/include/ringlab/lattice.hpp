#pragma once

#include <vector>

#include "ringlab/elem_set.hpp"

namespace ringlab {

  enum class LatticeFilter { all, lie_ideals, noncentral_lie_ideals };

  //! Additive subgroups (or Lie ideals) of the ring, each exactly once,
  //! ordered by size and then by member list.
  //!
  //! `all` needs |R| <= 256 and stops with Error{too_large} once more than
  //! `max_count` subgroups have been found. The Lie filters need
  //! |R| <= 6561; they start from the Lie closures of single elements and
  //! add principal Lie ideals to every member until nothing new appears,
  //! which reaches every Lie ideal since each is the sum of the principal
  //! ones it contains.
  std::vector<ElemSet> enumerate_additive_subgroups(FiniteRing const& fr, LatticeFilter filter,
                                                    std::size_t max_count = 200000);

}  // namespace ringlab
