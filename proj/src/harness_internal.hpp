#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/check_result.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/predicates.hpp"

namespace ringlab::detail {

  //! Value computed on first use; safe to share between threads.
  template <class T>
  class Lazy {
   public:
    template <class F>
    T const& get(F&& make) {
      std::call_once(flag_, [&] { value_.emplace(make()); });
      return *value_;
    }

   private:
    std::once_flag   flag_;
    std::optional<T> value_;
  };

  //! A catalog ring plus the data most checks need, computed on demand.
  class RingContext {
   public:
    explicit RingContext(std::string const& spec);

    std::string const& id() const {
      return ring_.id();
    }
    Ring const& ring() const {
      return ring_;
    }
    bool enumerable() const {
      return ring_.enumerable();
    }

    FiniteRing const& fr();

    ElemSet const& R();
    ElemSet const& Id();
    ElemSet const& U();
    ElemSet const& N();
    ElemSet const& Z();
    ElemSet const& E();
    ElemSet const& ER();  // [E,R]
    ElemSet const& RR();  // [R,R]

    PrimenessResult const&    primeness();
    RingClassification const& cls();
    bool                      semiprime() {
      return primeness().kind != Primeness::not_semiprime;
    }
    bool prime() {
      return primeness().kind == Primeness::prime;
    }

    std::vector<Index> const& central_idempotents();
    //! Primitive central idempotents f; for a semiprime ring the fR are
    //! the simple components and the R(1-f) its prime ideals.
    std::vector<Index> const& components();

    //! Lie ideals used by the lattice-quantified checks: the full lattice
    //! when |R| <= kLatticeLimit, otherwise a curated list.
    std::vector<ElemSet> const& lie_ideals();
    bool                        lie_lattice_complete();
    std::vector<ElemSet> const& noncentral_lie_ideals();

    std::string fmt(Index i) {
      return fr().format(i);
    }
    //! "a" or "a; b".
    std::string fmt(std::vector<Index> const& w);
    //! Replayable subset expression for a closed set ("add{...}").
    std::string describe(ElemSet const& s);

    //! For every x some idempotent e has e - x ∈ R(x - x^2).
    bool suitable();

    static constexpr Index kLatticeLimit = 512;

   private:
    Ring                              ring_;
    std::unique_ptr<FiniteRing>       fr_;
    std::once_flag                    fr_flag_;
    Lazy<ElemSet>                     r_, id_, u_, n_, z_, e_, er_, rr_;
    Lazy<PrimenessResult>             primeness_;
    Lazy<RingClassification>          cls_;
    Lazy<std::vector<Index>>          cidem_, components_;
    Lazy<std::vector<ElemSet>>        lie_, noncentral_;
    Lazy<bool>                        suitable_;
  };

  using CheckFn = std::function<void(RingContext&, CheckResult&)>;

  struct CheckDef {
    CheckInfo info;
    //! Instance checks run once, on this ring, if it is in the catalog.
    std::optional<std::string> instance_ring;
    //! Checks that only use criterion-level code may run on
    //! non-enumerable rings.
    bool    needs_enumeration = true;
    CheckFn run;
  };

  std::vector<CheckDef> core_checks();
  std::vector<CheckDef> semiprime_checks();

  using NamedSet = std::pair<std::string, ElemSet>;

  //! Id, U, N, Z, E, [E,R], R and [R,R] with their names.
  std::vector<NamedSet> standard_sets(RingContext& ctx);

  inline std::string yes_no(bool b) {
    return b ? "true" : "false";
  }

  //! Records the failed hypothesis and marks the result skipped; returns `ok`.
  bool hypothesis(CheckResult& res, bool ok, std::string const& what);

  //! The Lie ideal 0 × L × sl2 of prod(GF(2),M(2,GF(2)),M(2,GF(3))), where L
  //! is spanned by I and the swap matrix; nullopt for other rings.
  std::optional<ElemSet> three_component_instance(FiniteRing const& fr);

}  // namespace ringlab::detail
