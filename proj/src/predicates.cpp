#include "ringlab/predicates.hpp"

#include <algorithm>

#include "ringlab/error.hpp"
#include "span_builder.hpp"

namespace ringlab {

  std::string to_string(Primeness p) {
    switch (p) {
      case Primeness::prime:
        return "prime";
      case Primeness::semiprime_not_prime:
        return "semiprime_not_prime";
      case Primeness::not_semiprime:
        return "not_semiprime";
    }
    return "?";
  }

  Verdict x_semiprime(FiniteRing const& fr, ElemSet const& x) {
    if (x.members.empty()) {
      throw Error(ErrorCode::domain, "X must be nonempty");
    }
    auto const& xs = x.spanning();
    Verdict     v;
    for (Index a = 1; a < fr.size(); ++a) {
      bool sandwich_zero = true;
      for (auto g : xs) {
        ++v.checked_pairs;
        if (fr.mul(fr.mul(a, g), a) != 0) {
          sandwich_zero = false;
          break;
        }
      }
      if (sandwich_zero) {
        v.holds   = false;
        v.witness = {a};
        return v;
      }
    }
    return v;
  }

  Verdict x_prime(FiniteRing const& fr, ElemSet const& x) {
    if (x.members.empty()) {
      throw Error(ErrorCode::domain, "X must be nonempty");
    }
    auto const&        xs = x.spanning();
    Verdict            v;
    std::vector<Index> ax(xs.size());
    for (Index a = 1; a < fr.size(); ++a) {
      for (std::size_t k = 0; k < xs.size(); ++k) {
        ax[k] = fr.mul(a, xs[k]);
      }
      for (Index b = 1; b < fr.size(); ++b) {
        bool sandwich_zero = true;
        for (auto p : ax) {
          ++v.checked_pairs;
          if (fr.mul(p, b) != 0) {
            sandwich_zero = false;
            break;
          }
        }
        if (sandwich_zero) {
          v.holds   = false;
          v.witness = {a, b};
          return v;
        }
      }
    }
    return v;
  }

  bool replay_witness(FiniteRing const& fr, ElemSet const& x, std::vector<Index> const& w) {
    if (w.empty() || w.size() > 2 || std::count(w.begin(), w.end(), Index{0}) > 0) {
      return false;
    }
    auto a = w.front();
    auto b = w.back();
    return std::all_of(x.members.begin(), x.members.end(),
                       [&](Index v) { return fr.mul(fr.mul(a, v), b) == 0; });
  }

  PrimenessResult primeness(FiniteRing const& fr) {
    auto r  = whole_ring(fr);
    auto sp = x_semiprime(fr, r);
    if (!sp.holds) {
      return {Primeness::not_semiprime, sp.witness};
    }
    auto p = x_prime(fr, r);
    if (!p.holds) {
      return {Primeness::semiprime_not_prime, p.witness};
    }
    return {Primeness::prime, {}};
  }

  namespace {
    bool is_commutative(FiniteRing const& fr) {
      auto const& gens = fr.generators();
      for (auto g : gens) {
        for (auto h : gens) {
          if (fr.mul(g, h) != fr.mul(h, g)) {
            return false;
          }
        }
      }
      return true;
    }

    // e R as a set.
    ElemSet left_multiples(FiniteRing const& fr, Index e) {
      std::vector<Index> out(fr.size());
      for (Index r = 0; r < fr.size(); ++r) {
        out[r] = fr.mul(e, r);
      }
      return raw_set(fr, std::move(out));
    }

    // Additive closure of {z·x : z in C, x in X}.
    ElemSet central_span(FiniteRing const& fr, ElemSet const& center,
                         std::vector<Index> const& xs) {
      SpanBuilder span(fr);
      for (auto z : center.members) {
        for (auto x : xs) {
          span.add(fr.mul(z, x));
        }
      }
      return std::move(span).finish(ClosureKind::additive);
    }

    bool is_unit(FiniteRing const& fr, Index a) {
      return fr.ring().inverse(fr.element(a)).has_value();
    }
  }  // namespace

  RingClassification classify_ring(FiniteRing const& fr) {
    RingClassification c;
    c.primeness   = primeness(fr).kind;
    c.commutative = is_commutative(fr);

    c.reduced = true;
    for (Index a = 1; a < fr.size() && c.reduced; ++a) {
      c.reduced = fr.mul(a, a) != 0;
    }

    c.domain = true;
    for (Index a = 1; a < fr.size() && c.domain; ++a) {
      for (Index b = 1; b < fr.size(); ++b) {
        if (fr.mul(a, b) == 0) {
          c.domain = false;
          break;
        }
      }
    }

    c.regular = true;
    for (Index a = 0; a < fr.size() && c.regular; ++a) {
      bool found = false;
      for (Index b = 0; b < fr.size() && !found; ++b) {
        found = fr.mul(fr.mul(a, b), a) == a;
      }
      c.regular = found;
    }

    c.has_nontrivial_idempotent = special_subset(fr, SpecialKind::Id).size() > 2;

    if (fr.ring().characteristic() == 2 && c.primeness == Primeness::prime
        && !c.commutative) {
      auto center     = special_subset(fr, SpecialKind::Z);
      auto dim        = exact_log(fr.size(), center.size());
      c.exceptional   = dim && *dim == 4;
    }
    return c;
  }

  Thm3Criterion thm3_criterion(FiniteRing const& fr, ElemSet const& l) {
    if (!set_predicates(fr, l).is_lie_ideal) {
      throw Error(ErrorCode::hypothesis, "L is not a Lie ideal of " + fr.ring().id());
    }
    Thm3Criterion out;
    out.subring_closure_is_R = closure(fr, l, ClosureKind::subring).size() == fr.size();
    out.bracket_LL_nonzero   = bracket_set(fr, l, l).size() > 1;
    return out;
  }

  Thm8Classification thm8_classify(FiniteRing const& fr, ElemSet const& l) {
    return thm8_classify(fr, l, classify_ring(fr), special_subset(fr, SpecialKind::Z));
  }

  Thm8Classification thm8_classify(FiniteRing const& fr, ElemSet const& l,
                                   RingClassification const& cls, ElemSet const& center) {
    Thm8Classification out;
    auto               preds = set_predicates(fr, l);
    if (cls.primeness != Primeness::prime) {
      out.reason = "ring is not prime";
    } else if (cls.domain) {
      out.reason = "ring is a domain";
    } else if (!preds.is_lie_ideal) {
      out.reason = "L is not a Lie ideal";
    } else if (preds.is_central) {
      out.reason = "L is central";
    } else {
      out.applicable = true;
    }
    if (!out.applicable) {
      return out;
    }

    auto r = whole_ring(fr);
    // finite prime rings are simple, so properness reduces to [R,R] ⊆ L
    out.is_proper = is_subset(bracket_set(fr, r, r), l);

    auto& c2       = out.case_ii;
    c2.exceptional = cls.exceptional;
    c2.LL_zero     = bracket_set(fr, l, l).size() == 1;
    c2.dimLC       = center_dimension(fr, l, center).dim_LC_over_C;

    auto lc = central_span(fr, center, l.spanning());
    for (auto a : l.members) {
      std::vector<Index> brackets;
      for (auto g : fr.generators()) {
        brackets.push_back(fr.bracket(a, g));
      }
      if (!(central_span(fr, center, brackets) == lc)) {
        continue;
      }
      if (!c2.a_found) {
        c2.a_found = a;
      }
      bool all_units = std::all_of(center.members.begin(), center.members.end(),
                                   [&](Index beta) { return is_unit(fr, fr.add(a, beta)); });
      if (all_units) {
        c2.a_found               = a;
        c2.translates_invertible = true;
        break;
      }
    }

    out.predicted_L_prime = out.is_proper
                            || (c2.exceptional && c2.LL_zero && c2.dimLC == 2
                                && c2.translates_invertible);
    out.oracle_L_prime = x_prime(fr, l).holds;
    return out;
  }

  std::vector<Index> central_idempotents(FiniteRing const& fr) {
    auto               id     = special_subset(fr, SpecialKind::Id);
    auto               center = special_subset(fr, SpecialKind::Z);
    std::vector<Index> out;
    std::set_intersection(id.members.begin(), id.members.end(), center.members.begin(),
                          center.members.end(), std::back_inserter(out));
    return out;
  }

  bool thm19_properties(FiniteRing const& fr, ElemSet const& l, ElemSet const& lt,
                        ElemSet const& center, Index e1, Index e2, Index e3, bool* i,
                        bool* ii, bool* iii) {
    bool p1 = std::all_of(l.spanning().begin(), l.spanning().end(),
                          [&](Index x) { return center.contains(fr.mul(e1, x)); });
    bool p2 = std::all_of(lt.members.begin(), lt.members.end(), [&](Index x) {
      return center.contains(fr.mul(e2, fr.mul(x, x)));
    });

    std::vector<Index> e3l;
    for (auto x : l.spanning()) {
      e3l.push_back(fr.mul(e3, x));
    }
    bool p3 = true;
    for (auto a : left_multiples(fr, e3).members) {
      if (a == 0) {
        continue;
      }
      bool sandwich_zero = std::all_of(e3l.begin(), e3l.end(),
                                       [&](Index x) { return fr.mul(fr.mul(a, x), a) == 0; });
      if (sandwich_zero) {
        p3 = false;
        break;
      }
    }
    if (i) {
      *i = p1;
    }
    if (ii) {
      *ii = p2;
    }
    if (iii) {
      *iii = p3;
    }
    return p1 && p2 && p3;
  }

  Thm19Decomposition thm19_decompose(FiniteRing const& fr, ElemSet const& l) {
    if (primeness(fr).kind == Primeness::not_semiprime) {
      throw Error(ErrorCode::hypothesis, fr.ring().id() + " is not semiprime");
    }
    if (!set_predicates(fr, l).is_lie_ideal) {
      throw Error(ErrorCode::hypothesis, "L is not a Lie ideal of " + fr.ring().id());
    }
    return thm19_decompose(fr, l, special_subset(fr, SpecialKind::Z), central_idempotents(fr));
  }

  Thm19Decomposition thm19_decompose(FiniteRing const& fr, ElemSet const& l,
                                     ElemSet const& center, std::vector<Index> const& cidem) {
    auto generated_by = [&](ElemSet const& ideal) {
      for (auto e : cidem) {
        if (left_multiples(fr, e) == ideal) {
          return e;
        }
      }
      throw Error(ErrorCode::internal,
                  "annihilator is not generated by a central idempotent in "
                      + fr.ring().id());
    };

    auto r  = whole_ring(fr);
    auto e1 = generated_by(annihilator(fr, bracket_set(fr, l, r), Side::left));

    auto               lt = closure(fr, l, ClosureKind::subring);
    std::vector<Index> square_brackets;
    for (auto x : lt.members) {
      auto sq = fr.mul(x, x);
      for (auto g : fr.generators()) {
        square_brackets.push_back(fr.bracket(sq, g));
      }
    }
    auto e = generated_by(
        annihilator(fr, closure(fr, square_brackets, ClosureKind::ideal), Side::left));

    Thm19Decomposition out;
    out.e1 = e1;
    out.e2 = fr.sub(e, fr.mul(e1, e));
    out.e3 = fr.sub(fr.sub(fr.one(), out.e1), out.e2);

    auto is_cidem = [&](Index x) { return std::binary_search(cidem.begin(), cidem.end(), x); };
    out.central_orthogonal = is_cidem(out.e1) && is_cidem(out.e2) && is_cidem(out.e3)
                             && fr.mul(out.e1, out.e2) == 0 && fr.mul(out.e1, out.e3) == 0
                             && fr.mul(out.e2, out.e3) == 0;
    thm19_properties(fr, l, lt, center, out.e1, out.e2, out.e3, &out.property_i,
                     &out.property_ii, &out.property_iii);

    for (auto a : cidem) {
      for (auto b : cidem) {
        if (fr.mul(a, b) != 0) {
          continue;
        }
        auto c = fr.sub(fr.sub(fr.one(), a), b);
        if (thm19_properties(fr, l, lt, center, a, b, c)) {
          ++out.valid_triples;
        }
      }
    }
    return out;
  }

}  // namespace ringlab
