#include <doctest.h>

#include <random>

#include "ringlab/error.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/subset_expr.hpp"

using namespace ringlab;

namespace {

  Index idx(FiniteRing const& fr, std::string_view expr) {
    return fr.index_of(evaluate(fr.ring(), expr));
  }

  bool sandwich_zero(FiniteRing const& fr, Index a, ElemSet const& x, Index b) {
    for (auto m : x.members) {
      if (fr.mul(fr.mul(a, m), b) != 0) {
        return false;
      }
    }
    return true;
  }

  // brute-force deciders over every member of X, smallest witness first
  Verdict naive_semiprime(FiniteRing const& fr, ElemSet const& x) {
    for (Index a = 1; a < fr.size(); ++a) {
      if (sandwich_zero(fr, a, x, a)) {
        return {false, {a}, 0};
      }
    }
    return {};
  }

  Verdict naive_prime(FiniteRing const& fr, ElemSet const& x) {
    for (Index a = 1; a < fr.size(); ++a) {
      for (Index b = 1; b < fr.size(); ++b) {
        if (sandwich_zero(fr, a, x, b)) {
          return {false, {a, b}, 0};
        }
      }
    }
    return {};
  }

  std::vector<std::string> const rings = {"Z(4)",        "Z(6)",        "GF(4)",      "M(2,GF(2))",
                                          "UT(2,GF(2))", "UT(2,GF(3))", "M(2,GF(3))", "M(2,Z(4))",
                                          "prod(M(2,GF(2)),GF(2))"};

  ElemSet random_set(FiniteRing const& fr, std::mt19937& rng) {
    std::vector<Index> m;
    int                n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < n; ++i) {
      m.push_back(std::uniform_int_distribution<Index>(0, fr.size() - 1)(rng));
    }
    return raw_set(fr, m);
  }

}  // namespace

TEST_CASE("primeness examples") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  CHECK(primeness(m2).kind == Primeness::prime);

  FiniteRing z6(build_ring("Z(6)"));
  auto       p6 = primeness(z6);
  CHECK(p6.kind == Primeness::semiprime_not_prime);
  CHECK(p6.witness == std::vector<Index>{2, 3});

  FiniteRing ut(build_ring("UT(2,GF(2))"));
  auto       pu = primeness(ut);
  CHECK(pu.kind == Primeness::not_semiprime);
  CHECK(pu.witness == std::vector<Index>{idx(ut, "e(1,2)")});

  CHECK(to_string(Primeness::semiprime_not_prime) == "semiprime_not_prime");
}

TEST_CASE("x_semiprime and x_prime examples") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  CHECK(x_semiprime(m2, special_subset(m2, SpecialKind::Id)).holds);
  auto l  = evaluate_subset(m2, "add{I,[[0,1],[1,0]]}");
  auto v  = x_semiprime(m2, l);
  CHECK_FALSE(v.holds);
  CHECK(v.witness == std::vector<Index>{idx(m2, "[[1,1],[1,1]]")});
  CHECK(replay_witness(m2, l, v.witness));
  auto vp = x_prime(m2, l);
  CHECK_FALSE(vp.holds);
  CHECK(m2.format(vp.witness[0]) == "[[0,0],[1,1]]");
  CHECK(m2.format(vp.witness[1]) == "[[0,1],[0,1]]");
  CHECK(x_prime(m2, evaluate_subset(m2, "[E,R]")).holds);

  FiniteRing m3(build_ring("M(2,GF(3))"));
  CHECK(x_prime(m3, evaluate_subset(m3, "[R,R]")).holds);

  FiniteRing z4(build_ring("Z(4)"));
  auto       one = raw_set(z4, {z4.one()});
  auto       vz  = x_semiprime(z4, one);
  CHECK_FALSE(vz.holds);
  CHECK(vz.witness == std::vector<Index>{2});

  FiniteRing z6(build_ring("Z(6)"));
  auto       v6 = x_prime(z6, whole_ring(z6));
  CHECK_FALSE(v6.holds);
  CHECK(v6.witness == std::vector<Index>{2, 3});

  CHECK_THROWS_AS(x_semiprime(m2, raw_set(m2, {})), Error);
  CHECK_THROWS_AS(x_prime(m2, raw_set(m2, {})), Error);
}

TEST_CASE("deciders agree with the brute-force oracle, witnesses replay") {
  std::mt19937 rng(1);
  for (auto const& spec : rings) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    for (int trial = 0; trial < 12; ++trial) {
      auto x   = random_set(fr, rng);
      auto xp  = closure(fr, x, ClosureKind::additive);
      auto s   = x_semiprime(fr, x);
      auto ns  = naive_semiprime(fr, x);
      CHECK(s.holds == ns.holds);
      CHECK(s.witness == ns.witness);
      CHECK(x_semiprime(fr, xp).holds == s.holds);
      if (!s.holds) {
        CHECK(replay_witness(fr, x, s.witness));
      }
      if (fr.size() <= 64) {
        auto p  = x_prime(fr, x);
        auto np = naive_prime(fr, x);
        CHECK(p.holds == np.holds);
        CHECK(p.witness == np.witness);
        if (!p.holds) {
          CHECK(replay_witness(fr, x, p.witness));
        }
        CHECK(x_prime(fr, xp).holds == p.holds);
      }
      // monotonicity in X
      auto y = join(fr, xp, closure(fr, random_set(fr, rng), ClosureKind::additive));
      if (s.holds) {
        CHECK(x_semiprime(fr, y).holds);
      }
    }
  }
}

TEST_CASE("definition fidelity: {1} is reducedness and domain") {
  for (auto const& spec : rings) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    auto       cls = classify_ring(fr);
    auto       one = raw_set(fr, {fr.one()});
    CHECK(x_semiprime(fr, one).holds == cls.reduced);
    CHECK(x_prime(fr, one).holds == cls.domain);
    CHECK((x_semiprime(fr, whole_ring(fr)).holds) == (cls.primeness != Primeness::not_semiprime));
    CHECK((x_prime(fr, whole_ring(fr)).holds) == (cls.primeness == Primeness::prime));
  }
}

TEST_CASE("ring classification") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       c2 = classify_ring(m2);
  CHECK(c2.exceptional);
  CHECK(c2.regular);
  CHECK_FALSE(c2.commutative);
  CHECK(c2.has_nontrivial_idempotent);

  FiniteRing m3(build_ring("M(2,GF(3))"));
  CHECK_FALSE(classify_ring(m3).exceptional);
  CHECK(classify_ring(m3).regular);

  FiniteRing m4(build_ring("M(2,GF(4))"));
  CHECK(classify_ring(m4).exceptional);

  FiniteRing z4(build_ring("Z(4)"));
  CHECK_FALSE(classify_ring(z4).reduced);
  CHECK_FALSE(classify_ring(z4).regular);

  FiniteRing ut(build_ring("UT(2,GF(2))"));
  CHECK_FALSE(classify_ring(ut).regular);
  CHECK(classify_ring(ut).primeness == Primeness::not_semiprime);

  FiniteRing gf9(build_ring("GF(9)"));
  CHECK(classify_ring(gf9).domain);
  CHECK(classify_ring(gf9).reduced);
  CHECK_FALSE(classify_ring(gf9).exceptional);
}

TEST_CASE("regular rings are idempotent semiprime") {
  for (auto const& spec : rings) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    if (classify_ring(fr).regular) {
      CHECK(x_semiprime(fr, special_subset(fr, SpecialKind::Id)).holds);
    }
  }
}

TEST_CASE("thm3 criterion") {
  FiniteRing m3(build_ring("M(2,GF(3))"));
  auto       c = thm3_criterion(m3, evaluate_subset(m3, "[R,R]"));
  CHECK(c.subring_closure_is_R);
  CHECK(c.bracket_LL_nonzero);

  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       l = evaluate_subset(m2, "add{I,[[0,1],[1,0]]}");
  CHECK_FALSE(thm3_criterion(m2, l).subring_closure_is_R);
  CHECK_FALSE(thm3_criterion(m2, special_subset(m2, SpecialKind::Z)).bracket_LL_nonzero);
  CHECK_THROWS_AS(thm3_criterion(m2, evaluate_subset(m2, "add{e(1,1)}")), Error);
}

TEST_CASE("thm8 classifier") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       l   = evaluate_subset(m2, "add{I,[[0,1],[1,0]]}");
  auto       c10 = thm8_classify(m2, l);
  CHECK(c10.applicable);
  CHECK_FALSE(c10.is_proper);
  CHECK(c10.case_ii.exceptional);
  CHECK(c10.case_ii.LL_zero);
  CHECK(c10.case_ii.dimLC == 2);
  CHECK_FALSE(c10.case_ii.translates_invertible);
  CHECK_FALSE(c10.predicted_L_prime);
  CHECK_FALSE(c10.oracle_L_prime);

  auto ct = thm8_classify(m2, evaluate_subset(m2, "[R,R]"));
  CHECK(ct.is_proper);
  CHECK(ct.predicted_L_prime);
  CHECK(ct.oracle_L_prime);

  FiniteRing m3(build_ring("M(2,GF(3))"));
  auto       c3 = thm8_classify(m3, evaluate_subset(m3, "[R,R]"));
  CHECK(c3.is_proper);
  CHECK(c3.predicted_L_prime);
  CHECK(c3.oracle_L_prime);

  for (auto const* spec : {"M(2,GF(2))", "M(2,GF(3))"}) {
    CAPTURE(std::string(spec));
    FiniteRing fr(build_ring(spec));
    for (auto const& lie : enumerate_additive_subgroups(fr, LatticeFilter::noncentral_lie_ideals)) {
      auto c = thm8_classify(fr, lie);
      CHECK(c.applicable);
      CHECK(c.predicted_L_prime == c.oracle_L_prime);
      CHECK(c.predicted_L_prime == (c.is_proper || (c.case_ii.exceptional && c.case_ii.LL_zero &&
                                                    c.case_ii.dimLC == 2 && c.case_ii.a_found &&
                                                    c.case_ii.translates_invertible)));
    }
  }

  FiniteRing z6(build_ring("Z(6)"));
  CHECK_FALSE(thm8_classify(z6, whole_ring(z6)).applicable);
}

TEST_CASE("thm19 decomposition") {
  FiniteRing z6(build_ring("Z(6)"));
  auto       d6 = thm19_decompose(z6, whole_ring(z6));
  CHECK(d6.verified());
  CHECK(d6.e1 == z6.one());
  CHECK(d6.e2 == 0);
  CHECK(d6.e3 == 0);

  FiniteRing m3(build_ring("M(2,GF(3))"));
  auto       d3 = thm19_decompose(m3, whole_ring(m3));
  CHECK(d3.verified());
  CHECK(d3.e1 == 0);
  CHECK(d3.e2 == 0);
  CHECK(d3.e3 == m3.one());

  FiniteRing p(build_ring("prod(GF(2),M(2,GF(2)),M(2,GF(3)))"));
  auto       l = evaluate_subset(
      p, "add{(0,I,0),(0,[[0,1],[1,0]],0),(0,0,e(1,2)),(0,0,e(2,1)),(0,0,e(1,1)-e(2,2))}");
  CHECK(set_predicates(p, l).is_lie_ideal);
  auto d = thm19_decompose(p, l);
  CHECK(d.verified());
  CHECK(d.e1 == idx(p, "(1,0,0)"));
  CHECK(d.e2 == idx(p, "(0,I,0)"));
  CHECK(d.e3 == idx(p, "(0,0,I)"));

  FiniteRing ut(build_ring("UT(2,GF(2))"));
  CHECK_THROWS_AS(thm19_decompose(ut, whole_ring(ut)), Error);
}

TEST_CASE("Lie ideal implications on the lattice") {
  for (auto const* spec : {"M(2,GF(2))", "M(2,GF(3))", "prod(M(2,GF(2)),GF(2))", "Z(6)"}) {
    CAPTURE(std::string(spec));
    FiniteRing fr(build_ring(spec));
    auto       r = whole_ring(fr);
    for (auto const& l : enumerate_additive_subgroups(fr, LatticeFilter::lie_ideals)) {
      auto v = x_semiprime(fr, l);
      if (!v.holds) {
        // a L a = 0 forces [a,L] = 0
        CHECK(bracket_set(fr, raw_set(fr, v.witness), l).members == std::vector<Index>{0});
      } else {
        CHECK(x_semiprime(fr, product_set(fr, l, l)).holds);
        CHECK(x_semiprime(fr, power_set(fr, l, 3)).holds);
      }
      auto lr = bracket_set(fr, l, r);
      if (annihilator(fr, lr, Side::left).members == std::vector<Index>{0}) {
        CHECK(v.holds == x_semiprime(fr, lr).holds);
      }
    }
  }
}
