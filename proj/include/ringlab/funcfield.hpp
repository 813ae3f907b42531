#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringlab/check_result.hpp"
#include "ringlab/ratfunc.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

  //! Squarefree factorization f = prod g_i^{m_i} of a nonzero polynomial:
  //! the g_i are squarefree, pairwise coprime and nonconstant. Constants
  //! yield an empty list.
  std::vector<std::pair<Poly2, unsigned>> squarefree_factorization(Poly2 const& f);

  //! True iff f = g^2 for some g in F_2(t), decided by the parity of the
  //! squarefree multiplicities of numerator and denominator.
  bool is_square(RatFunc const& f);

  enum class Translates { yes, no, undecided };

  std::string to_string(Translates t);

  //! Whether a + βI is invertible for every β in F_2(t), for a in M(2,FF(2)).
  //! det(a + βI) = β^2 + tr(a)β + det(a); for tr(a) = 0 a root exists iff
  //! det(a) is a square. tr(a) != 0 is reported undecided. Throws
  //! Error{domain} if `ring` is not M(2,FF(2)).
  Translates translates_invertible(Ring const& ring, Elem const& a);

  //! The characteristic-2 examples: "remark10i" over M(2,GF(2)),
  //! "remark10ii" and "example4" over M(2,FF(2)). Throws
  //! Error{unknown_check} for other ids.
  CheckResult exceptional_example_check(std::string const& case_id);

}  // namespace ringlab
