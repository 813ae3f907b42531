#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ringlab/elem_set.hpp"

namespace ringlab {

  //! Named sets usable as atoms in a subset expression (e.g. "L").
  using SetBindings = std::map<std::string, ElemSet, std::less<>>;

  //! Evaluates the subset grammar
  //!
  //!   set  := atom ('*' atom)*
  //!   atom := Id | U | N | Z | E | R | name | '(' set ')' | '[' set ',' set ']'
  //!         | pow(set, n) | elpow(set, n) | annl(set) | annr(set)
  //!         | add{e,...} | lie{e,...} | ideal{e,...}
  //!
  //! where e are element expressions and `name` is looked up in `bindings`.
  //! Throws Error{parse} on malformed input.
  ElemSet evaluate_subset(FiniteRing const& fr, std::string_view expr,
                          SetBindings const& bindings = {});

}  // namespace ringlab
