#pragma once

#include "ringlab/predicates.hpp"

namespace ringlab {

  //! Inner derivation ad_b : x -> bx - xb.
  struct InnerDerivation {
    Index b = 0;

    Index apply(FiniteRing const& fr, Index x) const {
      return fr.bracket(b, x);
    }
  };

  //! {[b,a] : a in A} as an additive set (A additively closed).
  ElemSet derivation_image(FiniteRing const& fr, Index b, ElemSet const& a);

  //! For every β in Z(R), ℓ(b+β) = 0 or r(b+β) = 0. Throws
  //! Error{hypothesis} unless the ring is prime.
  bool thm21_criterion(FiniteRing const& fr, Index b);
  //! Same without the primeness check; `center` is Z(R).
  bool thm21_criterion(FiniteRing const& fr, Index b, ElemSet const& center);

  //! det(b + βI) != 0 for every β in F, for R = M(n, F) with F a field.
  //! Works on any Ring of that shape, including non-enumerable ones whose
  //! base field is finite. Throws Error{domain} otherwise.
  bool cor2_criterion(Ring const& ring, Elem const& b);

  //! x_semiprime(R, d(A)); a zero image fails with witness 1.
  Verdict d_semiprime_oracle(FiniteRing const& fr, Index b, ElemSet const& a);

}  // namespace ringlab
