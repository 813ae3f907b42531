#include "ringlab/elem_set.hpp"

#include <algorithm>

#include "ringlab/error.hpp"
#include "ringlab/predicates.hpp"
#include "span_builder.hpp"

namespace ringlab {

  ////////////////////////////////////////////////////////////////////////
  // SpanBuilder
  ////////////////////////////////////////////////////////////////////////

  SpanBuilder::SpanBuilder(FiniteRing const& fr) : fr_(fr), in_(fr.size(), 0) {
    in_[0] = 1;
    members_.push_back(0);
  }

  bool SpanBuilder::add(Index g) {
    if (in_[g]) {
      return false;
    }
    generators_.push_back(g);
    // S + <g> is the union of the cosets S + kg for k below the order of g
    // modulo S.
    std::vector<Index> multiples;
    for (Index m = g; !in_[m]; m = fr_.add(m, g)) {
      multiples.push_back(m);
    }
    auto base = members_.size();
    for (auto m : multiples) {
      for (std::size_t i = 0; i < base; ++i) {
        auto s = fr_.add(members_[i], m);
        in_[s] = 1;
        members_.push_back(s);
      }
    }
    return true;
  }

  ElemSet SpanBuilder::finish(ClosureKind kind) && {
    std::sort(members_.begin(), members_.end());
    return ElemSet{fr_.ring().id(), std::move(members_), std::move(generators_), kind};
  }

  ////////////////////////////////////////////////////////////////////////
  // ElemSet basics
  ////////////////////////////////////////////////////////////////////////

  bool ElemSet::contains(Index i) const {
    return std::binary_search(members.begin(), members.end(), i);
  }

  std::vector<Index> const& ElemSet::spanning() const noexcept {
    if (kind != ClosureKind::raw && generators) {
      return *generators;
    }
    return members;
  }

  ElemSet raw_set(FiniteRing const& fr, std::vector<Index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return ElemSet{fr.ring().id(), std::move(members), std::nullopt, ClosureKind::raw};
  }

  ElemSet whole_ring(FiniteRing const& fr) {
    std::vector<Index> all(fr.size());
    for (Index i = 0; i < fr.size(); ++i) {
      all[i] = i;
    }
    return ElemSet{fr.ring().id(), std::move(all), fr.generators(), ClosureKind::ideal};
  }

  ElemSet zero_set(FiniteRing const& fr) {
    return ElemSet{fr.ring().id(), {0}, std::vector<Index>{}, ClosureKind::ideal};
  }

  bool is_subset(ElemSet const& a, ElemSet const& b) {
    return std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                         a.members.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Special subsets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_unit(FiniteRing const& fr, Index a, std::vector<Index>& seen_by, Index stamp) {
      // a is a unit iff some positive power is 1; non-units run into a
      // cycle avoiding 1.
      auto p = a;
      while (seen_by[p] != stamp) {
        if (p == fr.one()) {
          return true;
        }
        seen_by[p] = stamp;
        p          = fr.mul(p, a);
      }
      return false;
    }

    bool is_nilpotent(FiniteRing const& fr, Index a) {
      std::uint64_t e = 1;
      while (e < fr.size()) {
        a = fr.mul(a, a);
        e *= 2;
      }
      return a == 0;
    }
  }  // namespace

  ElemSet special_subset(FiniteRing const& fr, SpecialKind kind) {
    std::vector<Index> out;
    switch (kind) {
      case SpecialKind::Id:
        for (Index a = 0; a < fr.size(); ++a) {
          if (fr.mul(a, a) == a) {
            out.push_back(a);
          }
        }
        return raw_set(fr, std::move(out));
      case SpecialKind::U: {
        std::vector<Index> seen_by(fr.size(), fr.size());
        for (Index a = 0; a < fr.size(); ++a) {
          if (is_unit(fr, a, seen_by, a)) {
            out.push_back(a);
          }
        }
        return raw_set(fr, std::move(out));
      }
      case SpecialKind::N:
        for (Index a = 0; a < fr.size(); ++a) {
          if (is_nilpotent(fr, a)) {
            out.push_back(a);
          }
        }
        return raw_set(fr, std::move(out));
      case SpecialKind::Z:
        for (Index a = 0; a < fr.size(); ++a) {
          auto const& gens = fr.generators();
          if (std::all_of(gens.begin(), gens.end(),
                          [&](Index g) { return fr.mul(a, g) == fr.mul(g, a); })) {
            out.push_back(a);
          }
        }
        // re-derive generators so later bilinear operations stay cheap
        return closure(fr, out, ClosureKind::additive);
      case SpecialKind::E:
        return closure(fr, special_subset(fr, SpecialKind::Id).members,
                       ClosureKind::additive);
    }
    throw Error(ErrorCode::internal, "unknown special subset");
  }

  ////////////////////////////////////////////////////////////////////////
  // Closures
  ////////////////////////////////////////////////////////////////////////

  ElemSet closure(FiniteRing const& fr, std::vector<Index> const& seed, ClosureKind mode) {
    if (mode == ClosureKind::raw) {
      throw Error(ErrorCode::domain, "closure mode raw is not a closure");
    }
    SpanBuilder span(fr);
    for (auto s : seed) {
      span.add(s);
    }
    auto const& ring_gens = fr.generators();
    // Saturate: every generator of the span is pushed through the
    // operations against the ring's additive generators (or, for subrings,
    // against the other span generators). Bilinearity extends this to all
    // members.
    for (std::size_t i = 0; i < span.generators().size(); ++i) {
      auto g = span.generators()[i];
      switch (mode) {
        case ClosureKind::additive:
        case ClosureKind::raw:
          break;
        case ClosureKind::ideal:
          for (auto r : ring_gens) {
            span.add(fr.mul(r, g));
            span.add(fr.mul(g, r));
          }
          break;
        case ClosureKind::right_ideal:
          for (auto r : ring_gens) {
            span.add(fr.mul(g, r));
          }
          break;
        case ClosureKind::lie:
          for (auto r : ring_gens) {
            span.add(fr.bracket(g, r));
          }
          break;
        case ClosureKind::subring:
          for (std::size_t j = 0; j <= i; ++j) {
            auto h = span.generators()[j];
            span.add(fr.mul(g, h));
            span.add(fr.mul(h, g));
          }
          break;
      }
    }
    return std::move(span).finish(mode);
  }

  ElemSet closure(FiniteRing const& fr, ElemSet const& seed, ClosureKind mode) {
    return closure(fr, seed.spanning(), mode);
  }

  ElemSet bracket_set(FiniteRing const& fr, ElemSet const& a, ElemSet const& b) {
    SpanBuilder span(fr);
    for (auto x : a.spanning()) {
      for (auto y : b.spanning()) {
        span.add(fr.bracket(x, y));
      }
    }
    return std::move(span).finish(ClosureKind::additive);
  }

  ElemSet product_set(FiniteRing const& fr, ElemSet const& a, ElemSet const& b) {
    SpanBuilder span(fr);
    for (auto x : a.spanning()) {
      for (auto y : b.spanning()) {
        span.add(fr.mul(x, y));
      }
    }
    return std::move(span).finish(ClosureKind::additive);
  }

  ElemSet power_set(FiniteRing const& fr, ElemSet const& a, unsigned n) {
    if (n == 0) {
      throw Error(ErrorCode::domain, "power_set needs n >= 1");
    }
    auto out = closure(fr, a, ClosureKind::additive);
    for (unsigned k = 1; k < n; ++k) {
      out = product_set(fr, out, a);
    }
    return out;
  }

  ElemSet elementwise_power(FiniteRing const& fr, ElemSet const& a, unsigned n) {
    if (n == 0) {
      throw Error(ErrorCode::domain, "elementwise_power needs n >= 1");
    }
    std::vector<Index> out;
    out.reserve(a.size());
    for (auto x : a.members) {
      out.push_back(fr.pow(x, n));
    }
    return raw_set(fr, std::move(out));
  }

  ElemSet join(FiniteRing const& fr, ElemSet const& a, ElemSet const& b) {
    SpanBuilder span(fr);
    for (auto x : a.spanning()) {
      span.add(x);
    }
    for (auto x : b.spanning()) {
      span.add(x);
    }
    return std::move(span).finish(ClosureKind::additive);
  }

  ElemSet annihilator(FiniteRing const& fr, ElemSet const& x, Side side) {
    auto const&        xs = x.spanning();
    std::vector<Index> out;
    for (Index a = 0; a < fr.size(); ++a) {
      bool kills = std::all_of(xs.begin(), xs.end(), [&](Index v) {
        return (side == Side::left ? fr.mul(a, v) : fr.mul(v, a)) == 0;
      });
      if (kills) {
        out.push_back(a);
      }
    }
    return closure(fr, out, ClosureKind::additive);
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates on sets
  ////////////////////////////////////////////////////////////////////////

  SetPredicates set_predicates(FiniteRing const& fr, ElemSet const& x) {
    SetPredicates out;
    auto const&   gens = fr.generators();

    bool additive = closure(fr, x.members, ClosureKind::additive).size() == x.size();
    out.is_lie_ideal = additive && std::all_of(x.members.begin(), x.members.end(), [&](Index v) {
                         return std::all_of(gens.begin(), gens.end(), [&](Index g) {
                           return x.contains(fr.bracket(v, g));
                         });
                       });

    out.is_central = std::all_of(x.members.begin(), x.members.end(), [&](Index v) {
      return std::all_of(gens.begin(), gens.end(),
                         [&](Index g) { return fr.mul(v, g) == fr.mul(g, v); });
    });

    out.is_special_invariant = true;
    for (Index t = 0; t < fr.size() && out.is_special_invariant; ++t) {
      if (fr.mul(t, t) != 0) {
        continue;
      }
      auto u     = fr.add(fr.one(), t);
      auto u_inv = fr.sub(fr.one(), t);
      for (auto v : x.members) {
        if (!x.contains(fr.mul(fr.mul(u, v), u_inv))) {
          out.is_special_invariant = false;
          break;
        }
      }
    }
    return out;
  }

  std::optional<unsigned> exact_log(std::uint64_t n, std::uint64_t base) {
    if (base < 2 || n == 0) {
      return n == 1 ? std::optional<unsigned>(0) : std::nullopt;
    }
    unsigned k = 0;
    while (n % base == 0) {
      n /= base;
      ++k;
    }
    return n == 1 ? std::optional<unsigned>(k) : std::nullopt;
  }

  CenterDimension center_dimension(FiniteRing const& fr, ElemSet const& l) {
    if (primeness(fr).kind != Primeness::prime) {
      throw Error(ErrorCode::hypothesis,
                  "center_dimension needs a prime ring; " + fr.ring().id() + " is not");
    }
    return center_dimension(fr, l, special_subset(fr, SpecialKind::Z));
  }

  CenterDimension center_dimension(FiniteRing const& fr, ElemSet const& l,
                                   ElemSet const& center) {
    SpanBuilder lc(fr);
    for (auto z : center.members) {
      for (auto x : l.spanning()) {
        lc.add(fr.mul(z, x));
      }
    }
    auto lc_set = std::move(lc).finish(ClosureKind::additive);

    CenterDimension out;
    out.center_size = static_cast<Index>(center.size());
    auto dim_r      = exact_log(fr.size(), center.size());
    auto dim_lc     = exact_log(lc_set.size(), center.size());
    if (!dim_r || !dim_lc) {
      throw Error(ErrorCode::internal, "LC is not a vector space over the center of "
                                           + fr.ring().id());
    }
    out.dim_R_over_C  = *dim_r;
    out.dim_LC_over_C = *dim_lc;
    return out;
  }

}  // namespace ringlab
