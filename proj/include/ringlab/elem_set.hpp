#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

  enum class ClosureKind { raw, additive, subring, ideal, right_ideal, lie };

  //! Finite subset of an enumerated ring, stored as sorted element indices.
  //!
  //! For closure kinds other than raw the members form an additive subgroup.
  //! When `generators` is present, members is exactly its closure of the
  //! given kind; closed sets always carry additive generators, which the
  //! bilinear operations below use in place of the full member list.
  struct ElemSet {
    std::string                       ring_id;
    std::vector<Index>                members;
    std::optional<std::vector<Index>> generators;
    ClosureKind                       kind = ClosureKind::raw;

    std::size_t size() const noexcept {
      return members.size();
    }
    bool contains(Index i) const;
    //! Generators if the set is additively closed and has them, else members.
    std::vector<Index> const& spanning() const noexcept;

    //! Set equality (members only).
    bool operator==(ElemSet const& other) const {
      return ring_id == other.ring_id && members == other.members;
    }
  };

  //! Raw set from arbitrary indices (sorted, deduplicated).
  ElemSet raw_set(FiniteRing const& fr, std::vector<Index> members);
  ElemSet whole_ring(FiniteRing const& fr);
  ElemSet zero_set(FiniteRing const& fr);

  bool is_subset(ElemSet const& a, ElemSet const& b);

  enum class SpecialKind { Id, U, N, Z, E };

  //! Id, U, N are raw; Z and E are additive.
  ElemSet special_subset(FiniteRing const& fr, SpecialKind kind);

  //! Smallest set of the given kind containing `seed` (mode raw is rejected).
  //! Subring closure is non-unital: the additive span of all finite products.
  ElemSet closure(FiniteRing const& fr, std::vector<Index> const& seed, ClosureKind mode);
  ElemSet closure(FiniteRing const& fr, ElemSet const& seed, ClosureKind mode);

  //! Additive closure of {[a,b] : a in A, b in B}.
  ElemSet bracket_set(FiniteRing const& fr, ElemSet const& a, ElemSet const& b);
  //! Additive closure of {ab : a in A, b in B}.
  ElemSet product_set(FiniteRing const& fr, ElemSet const& a, ElemSet const& b);
  //! n-fold product A·A···A, n >= 1.
  ElemSet power_set(FiniteRing const& fr, ElemSet const& a, unsigned n);
  //! Raw set {x^n : x in A}, n >= 1.
  ElemSet elementwise_power(FiniteRing const& fr, ElemSet const& a, unsigned n);
  //! Additive closure of A ∪ B.
  ElemSet join(FiniteRing const& fr, ElemSet const& a, ElemSet const& b);

  enum class Side { left, right };

  //! {a : aX = 0} (left) or {a : Xa = 0} (right); returned with kind
  //! additive since annihilators are subgroups.
  ElemSet annihilator(FiniteRing const& fr, ElemSet const& x, Side side);

  struct SetPredicates {
    bool is_lie_ideal         = false;
    bool is_central           = false;
    bool is_special_invariant = false;
  };

  //! is_lie_ideal requires an additive subgroup with [X,R] ⊆ X. Special
  //! invariance scans every t with t^2 = 0 and tests (1+t)x(1-t) ∈ X.
  SetPredicates set_predicates(FiniteRing const& fr, ElemSet const& x);

  struct CenterDimension {
    Index    center_size   = 0;
    unsigned dim_R_over_C  = 0;
    unsigned dim_LC_over_C = 0;
  };

  //! Requires a prime ring (checked), so that Z(R) is a field. LC is the
  //! additive closure of {z·x : z in Z(R), x in L}.
  CenterDimension center_dimension(FiniteRing const& fr, ElemSet const& l);
  //! Same without the primeness check; `center` is Z(R).
  CenterDimension center_dimension(FiniteRing const& fr, ElemSet const& l,
                                   ElemSet const& center);

  //! log_base(n) if n is an exact power of base, else nullopt.
  std::optional<unsigned> exact_log(std::uint64_t n, std::uint64_t base);

}  // namespace ringlab
