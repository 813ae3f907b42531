// Checks on semiprime rings: annihilator criteria, the central-idempotent
// decompositions, and statements about prime quotients and products.
//
// Finite semiprime rings are finite products of simple rings. The prime
// ideals are the R(1 - f) for the primitive central idempotents f, and
// R/R(1 - f) is identified with the corner fR (identity f).

#include <algorithm>

#include "harness_internal.hpp"
#include "ringlab/error.hpp"
#include "ringlab/spec.hpp"

namespace ringlab::detail {

  namespace {

    bool semiprime_for(RingContext& ctx, ElemSet const& x) {
      return x_semiprime(ctx.fr(), x).holds;
    }

    bool left_annihilator_zero(RingContext& ctx, ElemSet const& x) {
      return annihilator(ctx.fr(), x, Side::left).size() == 1;
    }

    // The corner fR as a ring with identity f.
    struct Corner {
      Index   f = 0;
      ElemSet members;  // fR, additively closed with generators
      ElemSet idempotents;
    };

    Corner corner(RingContext& ctx, Index f) {
      auto const&        fr = ctx.fr();
      std::vector<Index> seed;
      for (auto g : fr.generators()) {
        seed.push_back(fr.mul(f, g));
      }
      Corner c;
      c.f       = f;
      c.members = closure(fr, seed, ClosureKind::additive);
      std::vector<Index> id;
      for (auto x : c.members.members) {
        if (fr.mul(x, x) == x) {
          id.push_back(x);
        }
      }
      c.idempotents = raw_set(fr, std::move(id));
      return c;
    }

    // aXa = 0 with a in fR forces a = 0.
    bool corner_semiprime(FiniteRing const& fr, Corner const& c, ElemSet const& x) {
      for (auto a : c.members.members) {
        if (a == 0) {
          continue;
        }
        bool zero = std::all_of(x.spanning().begin(), x.spanning().end(),
                                [&](Index g) { return fr.mul(fr.mul(a, g), a) == 0; });
        if (zero) {
          return false;
        }
      }
      return true;
    }

    bool corner_prime(FiniteRing const& fr, Corner const& c, ElemSet const& x) {
      for (auto a : c.members.members) {
        if (a == 0) {
          continue;
        }
        for (auto b : c.members.members) {
          if (b == 0) {
            continue;
          }
          bool zero = std::all_of(x.spanning().begin(), x.spanning().end(),
                                  [&](Index g) { return fr.mul(fr.mul(a, g), b) == 0; });
          if (zero) {
            return false;
          }
        }
      }
      return true;
    }

    bool corner_domain(FiniteRing const& fr, Corner const& c) {
      for (auto a : c.members.members) {
        for (auto b : c.members.members) {
          if (a != 0 && b != 0 && fr.mul(a, b) == 0) {
            return false;
          }
        }
      }
      return true;
    }

    // E(fR) and [E(fR), fR].
    ElemSet corner_e(RingContext& ctx, Corner const& c) {
      return closure(ctx.fr(), c.idempotents.members, ClosureKind::additive);
    }
    ElemSet corner_er(RingContext& ctx, Corner const& c) {
      return bracket_set(ctx.fr(), corner_e(ctx, c), c.members);
    }

    // The image f·X of a subset.
    ElemSet image(RingContext& ctx, Index f, ElemSet const& x) {
      std::vector<Index> out;
      for (auto v : x.members) {
        out.push_back(ctx.fr().mul(f, v));
      }
      return raw_set(ctx.fr(), std::move(out));
    }

    // Some idempotent of R maps to a noncentral element of fR.
    bool has_noncentral_idempotent_image(RingContext& ctx, Index f) {
      return std::any_of(ctx.Id().members.begin(), ctx.Id().members.end(),
                         [&](Index e) { return !ctx.Z().contains(ctx.fr().mul(f, e)); });
    }

    std::vector<Corner> corners(RingContext& ctx) {
      std::vector<Corner> out;
      for (auto f : ctx.components()) {
        out.push_back(corner(ctx, f));
      }
      return out;
    }

    //////////////////////////////////////////////////////////////////////
    // Annihilator criteria
    //////////////////////////////////////////////////////////////////////

    void check_lem8(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto const& fr = ctx.fr();
      auto        sandwich_zero = [&](Index a, ElemSet const& x) {
        return std::all_of(x.spanning().begin(), x.spanning().end(),
                           [&](Index g) { return fr.mul(fr.mul(a, g), a) == 0; });
      };
      for (auto const& l : ctx.lie_ideals()) {
        auto                 lr      = bracket_set(fr, l, ctx.R());
        bool                 ann     = left_annihilator_zero(ctx, lr);
        std::optional<Index> bad_i, bad_ii;
        for (Index a = 1; a < fr.size(); ++a) {
          bool ala = sandwich_zero(a, l);
          if (ala && !bad_i && bracket_set(fr, raw_set(fr, {a}), l).size() > 1) {
            bad_i = a;
          }
          if (ann && !ala && !bad_ii && sandwich_zero(a, lr)) {
            bad_ii = a;
          }
        }
        auto d = ctx.describe(l);
        res.expect("(i) aLa = 0 implies [a,L] = 0 for L=" + d, !bad_i,
                   bad_i ? ctx.fmt(*bad_i) : "");
        if (ann) {
          res.expect("(ii) a[L,R]a = 0 implies aLa = 0 for L=" + d, !bad_ii,
                     bad_ii ? ctx.fmt(*bad_ii) : "");
        }
      }
    }

    void check_lem9(RingContext& ctx, CheckResult& res) {
      auto const& fr   = ctx.fr();
      auto        sets = standard_sets(ctx);
      std::vector<bool> sp;
      for (auto const& [name, x] : sets) {
        sp.push_back(semiprime_for(ctx, x));
      }
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
          if (sp[i] && sp[j]) {
            auto v = x_semiprime(fr, product_set(fr, sets[i].second, sets[j].second));
            res.expect("(i) " + sets[i].first + "*" + sets[j].first + "-semiprime", v.holds,
                       ctx.fmt(v.witness));
          }
        }
      }
      auto powers = [&](std::string const& name, ElemSet const& x) {
        if (!semiprime_for(ctx, x)) {
          return;
        }
        for (unsigned n = 2; n <= 3; ++n) {
          auto v = x_semiprime(fr, power_set(fr, x, n));
          res.expect("(ii) " + name + "^" + std::to_string(n) + "-semiprime", v.holds,
                     ctx.fmt(v.witness));
        }
      };
      for (auto const& [name, x] : sets) {
        powers(name, x);
      }
      for (auto const& l : ctx.lie_ideals()) {
        powers("L=" + ctx.describe(l), l);
      }
    }

    void check_cor12(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      std::size_t applied = 0;
      for (auto const& l : ctx.lie_ideals()) {
        auto lr = bracket_set(ctx.fr(), l, ctx.R());
        if (!left_annihilator_zero(ctx, lr)) {
          continue;
        }
        ++applied;
        res.expect("L-semiprime iff [L,R]-semiprime for L=" + ctx.describe(l),
                   semiprime_for(ctx, l) == semiprime_for(ctx, lr));
      }
      hypothesis(res, applied > 0, "some Lie ideal has l([L,R]) = 0");
    }

    void check_cor13(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.prime(), "R is prime")) {
        return;
      }
      for (auto const& l : ctx.noncentral_lie_ideals()) {
        auto lr = bracket_set(ctx.fr(), l, ctx.R());
        res.expect("L-semiprime iff [L,R]-semiprime for L=" + ctx.describe(l),
                   semiprime_for(ctx, l) == semiprime_for(ctx, lr));
      }
      hypothesis(res, !ctx.noncentral_lie_ideals().empty(), "R has a noncentral Lie ideal");
    }

    void check_cor14(RingContext& ctx, CheckResult& res) {
      // a finite ring is 2-torsion free iff its order is odd
      if (!hypothesis(res, ctx.semiprime() && ctx.fr().size() % 2 == 1,
                      "R is semiprime and 2-torsion free")) {
        return;
      }
      for (auto const& l : ctx.lie_ideals()) {
        auto lr = bracket_set(ctx.fr(), l, ctx.R());
        res.expect("[L,R]-semiprime iff l([L,R]) = 0 for L=" + ctx.describe(l),
                   semiprime_for(ctx, lr) == left_annihilator_zero(ctx, lr));
      }
    }

    void check_cor10(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.prime() && ctx.ring().characteristic() != 2,
                      "R is prime of characteristic != 2")) {
        return;
      }
      for (auto const& l : ctx.noncentral_lie_ideals()) {
        auto v = x_semiprime(ctx.fr(), l);
        res.expect("L-semiprime for L=" + ctx.describe(l), v.holds, ctx.fmt(v.witness));
      }
      hypothesis(res, !ctx.noncentral_lie_ideals().empty(), "R has a noncentral Lie ideal");
    }

    void check_thm13(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto const& fr = ctx.fr();
      auto        verify = [&](std::string const& name, ElemSet const& b) {
        auto plus = closure(fr, b, ClosureKind::additive);
        if (!res.expect(name + "+ is a Lie ideal", set_predicates(fr, plus).is_lie_ideal)) {
          return;
        }
        auto br  = bracket_set(fr, plus, ctx.R());
        bool ann = left_annihilator_zero(ctx, br);
        auto v   = x_semiprime(fr, br);
        res.expect("l([B,R]) = 0 iff [B,R]-semiprime for B=" + name, ann == v.holds,
                   ctx.fmt(v.witness));
        return;
      };
      verify("Id", ctx.Id());
      verify("central idempotents", raw_set(fr, ctx.central_idempotents()));
      auto ann       = left_annihilator_zero(ctx, ctx.ER());
      res.predicted  = "l([Id,R])=0: " + yes_no(ann);
      res.observed   = "[Id,R]-semiprime: " + yes_no(semiprime_for(ctx, ctx.ER()));
    }

    void check_thm16(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto const& fr  = ctx.fr();
      auto        ann = annihilator(fr, ctx.ER(), Side::left);
      auto        v   = x_semiprime(fr, ctx.ER());
      res.predicted   = "l([E,R])=0: " + yes_no(ann.size() == 1);
      res.observed    = "[E,R]-semiprime: " + yes_no(v.holds);
      res.expect("l([E,R]) = 0 iff [E,R]-semiprime", (ann.size() == 1) == v.holds,
                 ctx.fmt(v.witness));
      if (!v.holds) {
        res.expect("witness replays", replay_witness(fr, ctx.ER(), v.witness),
                   ctx.fmt(v.witness));
        res.expect("witness lies in l([E,R])", ann.contains(v.witness.front()),
                   ctx.fmt(v.witness));
      }
      bool has_unit = std::any_of(ctx.ER().members.begin(), ctx.ER().members.end(),
                                  [&](Index x) { return ctx.U().contains(x); });
      if (has_unit) {
        res.expect("[E,R] contains a unit, so [E,R]-semiprime", v.holds);
      }
    }

    //////////////////////////////////////////////////////////////////////
    // Central idempotent decompositions
    //////////////////////////////////////////////////////////////////////

    std::string triple(RingContext& ctx, Index a, Index b, Index c) {
      return "(" + ctx.fmt(a) + ", " + ctx.fmt(b) + ", " + ctx.fmt(c) + ")";
    }

    void check_thm19(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto const& fr = ctx.fr();
      for (auto const& l : ctx.lie_ideals()) {
        auto d = thm19_decompose(fr, l, ctx.Z(), ctx.central_idempotents());
        res.expect("(i)-(iii) hold for L=" + ctx.describe(l), d.verified(),
                   triple(ctx, d.e1, d.e2, d.e3));
        res.expect("some triple is valid for L=" + ctx.describe(l), d.valid_triples > 0);
      }
      if (auto inst = three_component_instance(fr)) {
        auto d        = thm19_decompose(fr, *inst, ctx.Z(), ctx.central_idempotents());
        auto expected = triple(ctx, fr.index_of(evaluate(ctx.ring(), "(1,0,0)")),
                               fr.index_of(evaluate(ctx.ring(), "(0,I,0)")),
                               fr.index_of(evaluate(ctx.ring(), "(0,0,I)")));
        res.predicted = expected;
        res.observed  = triple(ctx, d.e1, d.e2, d.e3);
        res.expect("0 x L x sl2 gives the component idempotents", *res.predicted == *res.observed,
                   *res.observed);
      }
    }

    void check_thm22(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto const& fr      = ctx.fr();
      bool        odd     = fr.size() % 2 == 1;
      std::size_t applied = 0;
      for (auto const& l : ctx.lie_ideals()) {
        if (!left_annihilator_zero(ctx, bracket_set(fr, l, ctx.R()))) {
          continue;
        }
        ++applied;
        auto name = ctx.describe(l);
        auto d    = thm19_decompose(fr, l, ctx.Z(), ctx.central_idempotents());
        res.expect("e1 = 0 for L=" + name, d.e1 == 0, ctx.fmt(d.e1));
        res.expect("e = e2 has e x^2 central and (1-e)R (1-e)L-semiprime for L=" + name,
                   d.property_ii && d.property_iii, ctx.fmt(d.e2));
        if (odd) {
          res.expect("e = 0 when 2-torsion free, L=" + name, d.e2 == 0, ctx.fmt(d.e2));
          auto v = x_semiprime(fr, l);
          res.expect("L-semiprime when 2-torsion free, L=" + name, v.holds, ctx.fmt(v.witness));
        }
      }
      hypothesis(res, applied > 0, "some Lie ideal has l([L,R]) = 0");
    }

    void check_example6(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto const&          fr = ctx.fr();
      std::vector<ElemSet> seen;
      for (Index x = 1; x < fr.size(); ++x) {
        auto rho = closure(fr, std::vector<Index>{x}, ClosureKind::right_ideal);
        if (std::find(seen.begin(), seen.end(), rho) != seen.end()) {
          continue;
        }
        bool ann = left_annihilator_zero(ctx, rho);
        for (unsigned n = 1; n <= 3; ++n) {
          auto v = x_semiprime(fr, power_set(fr, rho, n));
          res.expect("rho^" + std::to_string(n) + "-semiprime iff l(rho) = 0 for rho=" + ctx.fmt(x)
                         + "R",
                     v.holds == ann, ctx.fmt(x));
        }
        seen.push_back(std::move(rho));
      }
    }

    //////////////////////////////////////////////////////////////////////
    // Idempotent semiprimeness and prime quotients
    //////////////////////////////////////////////////////////////////////

    void check_thm1(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      for (auto const& c : corners(ctx)) {
        bool ok = corner_domain(ctx.fr(), c) || has_noncentral_idempotent_image(ctx, c.f);
        if (!hypothesis(res, ok,
                        "R/P is a domain or has a noncentral idempotent image, f=" + ctx.fmt(c.f))) {
          return;
        }
      }
      auto v = x_semiprime(ctx.fr(), ctx.Id());
      res.expect("Id-semiprime", v.holds, ctx.fmt(v.witness));
    }

    void check_thm2(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.cls().regular, "R is regular")) {
        return;
      }
      auto v = x_semiprime(ctx.fr(), ctx.Id());
      res.expect("Id-semiprime", v.holds, ctx.fmt(v.witness));
    }

    void check_thm110(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.ring().family() == Family::product, "R is a direct product")) {
        return;
      }
      auto factors = ctx.ring().children();
      for (auto kind : {SpecialKind::Id, SpecialKind::U}) {
        auto        name      = kind == SpecialKind::Id ? std::string("Id") : std::string("U");
        auto const& whole     = kind == SpecialKind::Id ? ctx.Id() : ctx.U();
        bool        all       = true;
        std::size_t size_prod = 1;
        for (auto const& f : factors) {
          FiniteRing ff(f);
          auto       x = special_subset(ff, kind);
          size_prod *= x.size();
          all = all && x_semiprime(ff, x).holds;
        }
        res.expect(name + " of the product is the product of the " + name,
                   whole.size() == size_prod);
        bool product_sp = semiprime_for(ctx, whole);
        res.expect(name + "-semiprime iff every factor is", product_sp == all);
        if (kind == SpecialKind::Id) {
          res.predicted = "factors Id-semiprime: " + yes_no(all);
          res.observed  = "product Id-semiprime: " + yes_no(product_sp);
        }
      }
    }

    void check_prop4(RingContext& ctx, CheckResult& res) {
      auto cs = corners(ctx);
      if (!hypothesis(res, cs.size() > 1, "R has more than one block")) {
        return;
      }
      bool all = true;
      for (auto const& c : cs) {
        all = all && corner_semiprime(ctx.fr(), c, c.idempotents);
      }
      bool whole    = semiprime_for(ctx, ctx.Id());
      res.predicted = "blocks Id-semiprime: " + yes_no(all);
      res.observed  = "R Id-semiprime: " + yes_no(whole);
      res.expect("Id-semiprime iff every block is", whole == all);
    }

    void check_thm14(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto cs = corners(ctx);
      for (auto const& c : cs) {
        if (!hypothesis(res, has_noncentral_idempotent_image(ctx, c.f),
                        "R/P has a noncentral idempotent image, f=" + ctx.fmt(c.f))) {
          return;
        }
      }
      auto const& fr = ctx.fr();
      auto        v  = x_semiprime(fr, ctx.ER());
      res.expect("(i) [E,R]-semiprime", v.holds, ctx.fmt(v.witness));
      Index sum = 0;
      for (auto const& c : cs) {
        sum = fr.add(sum, c.f);
        res.expect("(ii) R/P is [E(R/P),R/P]-prime, f=" + ctx.fmt(c.f),
                   corner_prime(fr, c, corner_er(ctx, c)));
      }
      res.expect("(iii) the prime ideals meet in 0", sum == fr.one());
    }

    void check_thm15(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime(), "R is semiprime")) {
        return;
      }
      auto const& fr = ctx.fr();
      for (auto const& c : corners(ctx)) {
        auto lifted = closure(fr, image(ctx, c.f, ctx.E()), ClosureKind::additive);
        if (!hypothesis(res, lifted == corner_e(ctx, c),
                        "image of E(R) is E(R/P), f=" + ctx.fmt(c.f))
            || !hypothesis(res, corner_prime(fr, c, corner_er(ctx, c)),
                           "R/P is [E(R/P),R/P]-prime, f=" + ctx.fmt(c.f))) {
          return;
        }
      }
      auto v = x_semiprime(fr, ctx.ER());
      res.expect("[E,R]-semiprime", v.holds, ctx.fmt(v.witness));
    }

    void check_thm17(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime() && ctx.suitable(), "R is semiprime and suitable")) {
        return;
      }
      for (auto const& c : corners(ctx)) {
        if (!hypothesis(res, c.idempotents.size() > 2,
                        "R/P has a nontrivial idempotent, f=" + ctx.fmt(c.f))) {
          return;
        }
      }
      auto v = x_semiprime(ctx.fr(), ctx.ER());
      res.expect("[E,R]-semiprime", v.holds, ctx.fmt(v.witness));
    }

    void check_prop2(RingContext& ctx, CheckResult& res) {
      if (!hypothesis(res, ctx.semiprime() && ctx.suitable(), "R is semiprime and suitable")) {
        return;
      }
      auto const& fr = ctx.fr();
      for (auto const& c : corners(ctx)) {
        res.expect("image of Id(R) is Id(R/P), f=" + ctx.fmt(c.f),
                   image(ctx, c.f, ctx.Id()) == c.idempotents);
        auto lifted = closure(fr, image(ctx, c.f, ctx.E()), ClosureKind::additive);
        res.expect("image of E(R) is E(R/P), f=" + ctx.fmt(c.f), lifted == corner_e(ctx, c));
      }
    }

    void check_example3(RingContext& ctx, CheckResult& res) {
      auto const& fr  = ctx.fr();
      auto        ann = annihilator(fr, ctx.ER(), Side::left);
      std::vector<Index> expected;
      for (auto text : {"(0, 0)", "(0, 1)"}) {
        expected.push_back(fr.index_of(evaluate(ctx.ring(), text)));
      }
      res.predicted = "l([E,R]) = {(0, 0), (0, 1)}";
      res.observed  = "l([E,R]) size " + std::to_string(ann.size());
      res.expect("l([E,R]) = 0 + R2", ann.members == expected, ctx.describe(ann));
      auto v = x_semiprime(fr, ctx.ER());
      res.expect("not [E,R]-semiprime", !v.holds);
      if (!v.holds) {
        res.expect("witness replays", replay_witness(fr, ctx.ER(), v.witness),
                   ctx.fmt(v.witness));
      }
      auto e = x_semiprime(fr, ctx.E());
      res.expect("E-semiprime", e.holds, ctx.fmt(e.witness));
      for (auto const& c : corners(ctx)) {
        res.expect("(ii) R/P is a domain or has a noncentral idempotent image, f=" + ctx.fmt(c.f),
                   corner_domain(fr, c) || has_noncentral_idempotent_image(ctx, c.f));
      }
    }

    CheckDef def(std::string id, std::string anchor, std::string module, CheckFn fn) {
      return CheckDef{{std::move(id), std::move(anchor), std::move(module)}, std::nullopt, true,
                      std::move(fn)};
    }

  }  // namespace

  std::vector<CheckDef> semiprime_checks() {
    std::vector<CheckDef> out{
        def("lem8", "If aLa=0 where a∈R, then [a,L]=0", "predicates", check_lem8),
        def("lem9", "R is X^n-semiprime for any positive integer n", "predicates", check_lem9),
        def("cor12", "R is L-semiprime iff it is [L,R]-semiprime", "predicates", check_cor12),
        def("cor13", "prime, L noncentral: L-semiprime iff [L,R]-semiprime", "predicates",
            check_cor13),
        def("cor14", "2-torsion free: [L,R]-semiprime iff l([L,R])=0", "predicates",
            check_cor14),
        def("cor10", "characteristic ≠ 2 ... Then R is L-semiprime", "predicates", check_cor10),
        def("thm13", "ℓ_R([B,R])=0 iff R is [B,R]-semiprime", "predicates", check_thm13),
        def("thm16", "ℓ_R([E(R),R])=0 iff R is [E(R),R]-semiprime", "predicates", check_thm16),
        def("thm19", "orthogonal idempotents e1,e2,e3", "predicates", check_thm19),
        def("thm22", "ℓ_R([L,R])=0: idempotent e with ex^2 central, (1-e)L-semiprime",
            "predicates", check_thm22),
        def("example6", "ρ^n-semiprime iff ℓ_R(ρ)=0", "predicates", check_example6),
        def("thm1", "either R/P is a domain or there exists an idempotent", "predicates",
            check_thm1),
        def("thm2", "Every regular ring is idempotent semiprime", "predicates", check_thm2),
        def("thm110", "iff R_β is X(R_β)-semiprime", "predicates", check_thm110),
        def("prop4", "iff each component is idempotent semiprime", "predicates", check_prop4),
        def("thm14", "subdirect product of prime rings", "predicates", check_thm14),
        def("thm15", "image of E(R) is E(R/P): [E(R),R]-semiprime", "predicates", check_thm15),
        def("thm17", "suitable with nontrivial idempotents mod P: [E(R),R]-semiprime",
            "predicates", check_thm17),
        def("prop2", "idempotents can be lifted modulo every left ideal", "predicates",
            check_prop2),
    };
    out.push_back(CheckDef{{"example3", "0⊕R₂ ≠ 0", "predicates"},
                           std::string("prod(M(2,GF(2)),GF(2))"), true, check_example3});
    return out;
  }

}  // namespace ringlab::detail
