#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/elem_set.hpp"

namespace ringlab {

  //! Outcome of an X-semiprime or X-prime decision.
  //!
  //! On failure `witness` holds the canonically smallest a (semiprime form,
  //! one entry) or pair (a, b) (prime form, two entries).
  struct Verdict {
    bool               holds = true;
    std::vector<Index> witness;
    std::uint64_t      checked_pairs = 0;
  };

  enum class Primeness { prime, semiprime_not_prime, not_semiprime };

  struct PrimenessResult {
    Primeness          kind = Primeness::prime;
    std::vector<Index> witness;
  };

  std::string to_string(Primeness p);

  PrimenessResult primeness(FiniteRing const& fr);

  //! aXa = 0 implies a = 0. Throws Error{domain} for empty X.
  Verdict x_semiprime(FiniteRing const& fr, ElemSet const& x);
  //! aXb = 0 implies a = 0 or b = 0. Throws Error{domain} for empty X.
  Verdict x_prime(FiniteRing const& fr, ElemSet const& x);

  //! Re-evaluates the defining condition on a witness: true iff the witness
  //! really violates X-semiprimeness (one element) or X-primeness (two).
  bool replay_witness(FiniteRing const& fr, ElemSet const& x, std::vector<Index> const& w);

  struct RingClassification {
    bool reduced                   = false;
    bool domain                    = false;
    bool regular                   = false;
    bool exceptional               = false;
    bool has_nontrivial_idempotent = false;
    bool commutative               = false;
    Primeness primeness            = Primeness::prime;
  };

  RingClassification classify_ring(FiniteRing const& fr);

  struct Thm3Criterion {
    bool subring_closure_is_R = false;
    bool bracket_LL_nonzero   = false;
  };

  //! Throws Error{hypothesis} if L is not a Lie ideal.
  Thm3Criterion thm3_criterion(FiniteRing const& fr, ElemSet const& l);

  struct Thm8CaseII {
    bool                 exceptional = false;
    bool                 LL_zero     = false;
    unsigned             dimLC       = 0;
    //! First a in L with LC = [a, RC] and a + β invertible for all β in C;
    //! if none qualifies, the first a with LC = [a, RC] (if any).
    std::optional<Index> a_found;
    bool                 translates_invertible = false;
  };

  struct Thm8Classification {
    bool        applicable = false;
    std::string reason;  // why not applicable
    bool        is_proper = false;
    Thm8CaseII  case_ii;
    bool        predicted_L_prime = false;
    bool        oracle_L_prime    = false;
  };

  //! Hypotheses: prime, not a domain, L a noncentral Lie ideal. Violations
  //! are reported through `applicable`/`reason`.
  Thm8Classification thm8_classify(FiniteRing const& fr, ElemSet const& l);
  //! Same, with the ring classification and center supplied by the caller.
  Thm8Classification thm8_classify(FiniteRing const& fr, ElemSet const& l,
                                   RingClassification const& cls, ElemSet const& center);

  struct Thm19Decomposition {
    Index e1 = 0, e2 = 0, e3 = 0;
    bool  central_orthogonal = false;  // central idempotents, orthogonal, sum 1
    bool  property_i         = false;  // e1 L ⊆ C
    bool  property_ii        = false;  // e2 x^2 ∈ C for x in the subring of L
    bool  property_iii       = false;  // e3 R is e3 L-semiprime
    //! Number of central orthogonal triples satisfying (i)-(iii).
    std::size_t valid_triples = 0;

    bool verified() const {
      return central_orthogonal && property_i && property_ii && property_iii;
    }
  };

  //! Builds e1 from ℓ([L,R]) = e1 R, e2 = (1 - e1) e where ℓ of the ideal
  //! generated by {[x^2, r] : x in L̃} is eR, and e3 = 1 - e1 - e2, then
  //! re-verifies (i)-(iii). Throws Error{hypothesis} if R is not semiprime
  //! or L is not a Lie ideal.
  Thm19Decomposition thm19_decompose(FiniteRing const& fr, ElemSet const& l);
  //! Same without the hypothesis checks; `center` is Z(R) and `cidem` the
  //! central idempotents.
  Thm19Decomposition thm19_decompose(FiniteRing const& fr, ElemSet const& l,
                                     ElemSet const& center, std::vector<Index> const& cidem);

  //! Central idempotents in canonical order.
  std::vector<Index> central_idempotents(FiniteRing const& fr);

  //! Tests properties (i)-(iii) above for a given triple; `lt` is the
  //! subring generated by L.
  bool thm19_properties(FiniteRing const& fr, ElemSet const& l, ElemSet const& lt,
                        ElemSet const& center, Index e1, Index e2, Index e3,
                        bool* i = nullptr, bool* ii = nullptr, bool* iii = nullptr);

}  // namespace ringlab
