#pragma once

#include <vector>

#include "ringlab/elem_set.hpp"

namespace ringlab {

  //! Incrementally grown additive subgroup with O(1) membership.
  class SpanBuilder {
   public:
    explicit SpanBuilder(FiniteRing const& fr);

    //! Extends the span by g; false if g was already a member.
    bool add(Index g);

    bool contains(Index i) const {
      return in_[i] != 0;
    }
    std::size_t size() const {
      return members_.size();
    }
    //! Elements that enlarged the span, in insertion order.
    std::vector<Index> const& generators() const {
      return generators_;
    }

    ElemSet finish(ClosureKind kind) &&;

   private:
    FiniteRing const&  fr_;
    std::vector<char>  in_;
    std::vector<Index> members_;
    std::vector<Index> generators_;
  };

}  // namespace ringlab
