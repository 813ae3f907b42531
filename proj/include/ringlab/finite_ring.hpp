#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

  //! Index type for elements of an enumerated ring.
  using Index = std::uint32_t;

  //! An enumerable Ring with its elements numbered 0 .. size()-1.
  //!
  //! The index of an element is its mixed-radix encoding with the first digit
  //! most significant, so index order is the canonical element order and
  //! index 0 is zero. Small rings get full addition and multiplication
  //! tables; larger ones decode, operate and re-encode.
  class FiniteRing {
   public:
    //! Throws Error{not_enumerable} or Error{too_large} (above 2^20 elements).
    explicit FiniteRing(Ring ring);

    Ring const& ring() const noexcept {
      return ring_;
    }
    Index size() const noexcept {
      return size_;
    }

    Index index_of(Elem const& e) const;
    Elem  element(Index i) const;

    static constexpr Index zero() noexcept {
      return 0;
    }
    Index one() const noexcept {
      return one_;
    }

    Index add(Index a, Index b) const;
    Index neg(Index a) const;
    Index sub(Index a, Index b) const {
      return add(a, neg(b));
    }
    Index mul(Index a, Index b) const;
    Index bracket(Index a, Index b) const {
      return sub(mul(a, b), mul(b, a));
    }
    Index pow(Index a, std::uint64_t k) const;

    //! Additive generators of the ring, as indices.
    std::vector<Index> const& generators() const noexcept {
      return generators_;
    }

    std::string format(Index i) const {
      return ring_.format(element(i));
    }

   private:
    Ring                       ring_;
    Index                      size_ = 0;
    Index                      one_  = 0;
    std::vector<std::uint32_t> radices_;
    std::vector<Index>         generators_;
    std::vector<Index>         add_table_;
    std::vector<Index>         mul_table_;
    std::vector<Index>         neg_table_;
  };

}  // namespace ringlab
