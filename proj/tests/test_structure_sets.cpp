#include <doctest.h>

#include <random>
#include <set>

#include "ringlab/elem_set.hpp"
#include "ringlab/error.hpp"
#include "ringlab/lattice.hpp"

using namespace ringlab;

namespace {

  Index idx(FiniteRing const& fr, std::string_view expr) {
    return fr.index_of(evaluate(fr.ring(), expr));
  }

  std::vector<Index> all_of(FiniteRing const& fr) {
    std::vector<Index> v(fr.size());
    for (Index i = 0; i < fr.size(); ++i) {
      v[i] = i;
    }
    return v;
  }

  // saturation against every ring element rather than generators
  std::vector<Index> naive_closure(FiniteRing const& fr, std::vector<Index> seed, ClosureKind m) {
    std::set<Index> s(seed.begin(), seed.end());
    s.insert(0);
    auto r = all_of(fr);
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<Index> cur(s.begin(), s.end());
      auto put = [&](Index x) { grew |= s.insert(x).second; };
      for (auto a : cur) {
        for (auto b : cur) {
          put(fr.add(a, b));
          if (m == ClosureKind::subring) {
            put(fr.mul(a, b));
          }
        }
        for (auto x : r) {
          if (m == ClosureKind::ideal || m == ClosureKind::right_ideal) {
            put(fr.mul(a, x));
          }
          if (m == ClosureKind::ideal) {
            put(fr.mul(x, a));
          }
          if (m == ClosureKind::lie) {
            put(fr.bracket(a, x));
          }
        }
      }
    }
    return {s.begin(), s.end()};
  }

  std::vector<Index> random_seed(FiniteRing const& fr, std::mt19937& rng, int n) {
    std::vector<Index> out;
    for (int i = 0; i < n; ++i) {
      out.push_back(std::uniform_int_distribution<Index>(0, fr.size() - 1)(rng));
    }
    return out;
  }

  std::vector<std::string> const rings = {"Z(6)",        "Z(4)",        "M(2,GF(2))",
                                          "UT(2,GF(3))", "UT(2,GF(2))", "M(2,GF(3))",
                                          "prod(M(2,GF(2)),GF(2))"};

  constexpr ClosureKind modes[] = {ClosureKind::additive, ClosureKind::subring, ClosureKind::ideal,
                                   ClosureKind::right_ideal, ClosureKind::lie};

}  // namespace

TEST_CASE("special subsets") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  CHECK(special_subset(m2, SpecialKind::Id).size() == 8);
  CHECK(special_subset(m2, SpecialKind::U).size() == 6);
  CHECK(special_subset(m2, SpecialKind::E).size() == 16);
  CHECK(special_subset(m2, SpecialKind::Z).size() == 2);
  CHECK(special_subset(m2, SpecialKind::N).size() == 4);

  FiniteRing z4(build_ring("Z(4)"));
  CHECK(special_subset(z4, SpecialKind::Id).members == std::vector<Index>{0, 1});
  CHECK(special_subset(z4, SpecialKind::N).members == std::vector<Index>{0, 2});

  auto ff = build_ring("M(2,FF(2))");
  CHECK_THROWS_AS(FiniteRing{ff}, Error);
}

TEST_CASE("special subsets against their definitions") {
  for (auto const& spec : rings) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    auto       id = special_subset(fr, SpecialKind::Id);
    auto       u  = special_subset(fr, SpecialKind::U);
    auto       n  = special_subset(fr, SpecialKind::N);
    auto       z  = special_subset(fr, SpecialKind::Z);
    for (Index a = 0; a < fr.size(); ++a) {
      CHECK(id.contains(a) == (fr.mul(a, a) == a));
      bool unit = false, central = true;
      for (Index b = 0; b < fr.size(); ++b) {
        unit    = unit || (fr.mul(a, b) == fr.one() && fr.mul(b, a) == fr.one());
        central = central && fr.mul(a, b) == fr.mul(b, a);
      }
      CHECK(u.contains(a) == unit);
      CHECK(z.contains(a) == central);
      bool nil = false;
      for (Index p = a, k = 0; k <= fr.size() && !nil; ++k, p = fr.mul(p, a)) {
        nil = p == 0;
      }
      CHECK(n.contains(a) == nil);
    }
    CHECK(special_subset(fr, SpecialKind::E).members ==
          naive_closure(fr, id.members, ClosureKind::additive));
  }
}

TEST_CASE("closure examples") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       lie = closure(m2, {idx(m2, "e(1,2)")}, ClosureKind::lie);
  std::vector<Index> expect{0, idx(m2, "e(1,2)"), idx(m2, "I"), idx(m2, "I+e(1,2)")};
  std::sort(expect.begin(), expect.end());
  CHECK(lie.members == expect);
  CHECK(closure(m2, {idx(m2, "e(1,1)")}, ClosureKind::ideal).size() == 16);

  FiniteRing z6(build_ring("Z(6)"));
  CHECK(closure(z6, {2}, ClosureKind::additive).members == std::vector<Index>{0, 2, 4});
}

TEST_CASE("closure matches the naive oracle and satisfies its invariants") {
  std::mt19937 rng(42);
  for (auto const& spec : rings) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    for (auto m : modes) {
      CAPTURE(static_cast<int>(m));
      for (int trial = 0; trial < 6; ++trial) {
        auto seed = random_seed(fr, rng, 1 + trial % 3);
        auto c    = closure(fr, seed, m);
        CHECK(c.members == naive_closure(fr, seed, m));
        CHECK(std::is_sorted(c.members.begin(), c.members.end()));
        CHECK(c.kind == m);
        CHECK(closure(fr, c, m).members == c.members);
        if (c.generators) {
          CHECK(closure(fr, *c.generators, m).members == c.members);
        }
      }
    }
  }
}

TEST_CASE("bracket and derived sets") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       r  = whole_ring(m2);
  auto       e  = special_subset(m2, SpecialKind::E);
  auto       er = bracket_set(m2, e, r);
  CHECK(er.size() == 8);
  CHECK(er.members == bracket_set(m2, e, e).members);
  for (auto x : er.members) {
    CHECK(trace(m2.ring(), m2.element(x)) == m2.ring().children()[0].zero());
  }
  CHECK(er.kind == ClosureKind::additive);

  auto l = closure(m2, {idx(m2, "I"), idx(m2, "[[0,1],[1,0]]")}, ClosureKind::additive);
  CHECK(l.size() == 4);
  CHECK(bracket_set(m2, l, l).members == std::vector<Index>{0});
  CHECK(product_set(m2, l, l).members == l.members);

  FiniteRing m3(build_ring("M(2,GF(3))"));
  auto       rr = bracket_set(m3, whole_ring(m3), whole_ring(m3));
  CHECK(rr.size() == 27);
  CHECK(power_set(m3, rr, 2).size() == 81);
  CHECK(power_set(m3, rr, 1).members == rr.members);
  auto u = special_subset(m3, SpecialKind::U);
  CHECK(elementwise_power(m3, u, 1).members == u.members);
  // squares of units in GL2(F3): the elementwise power is raw and not additive
  auto u2 = elementwise_power(m3, u, 2);
  CHECK(u2.kind == ClosureKind::raw);
  for (auto x : u2.members) {
    bool found = false;
    for (auto y : u.members) {
      found = found || m3.mul(y, y) == x;
    }
    CHECK(found);
  }
  CHECK_THROWS_AS(power_set(m3, rr, 0), Error);
}

TEST_CASE("annihilators") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       left = annihilator(m2, raw_set(m2, {idx(m2, "e(1,2)")}), Side::left);
  CHECK(left.size() == 4);
  for (auto a : left.members) {
    CHECK(m2.ring().entry(m2.element(a), 0, 0) == m2.ring().children()[0].zero());
    CHECK(m2.ring().entry(m2.element(a), 1, 0) == m2.ring().children()[0].zero());
  }

  FiniteRing p(build_ring("prod(M(2,GF(2)),GF(2))"));
  auto er = bracket_set(p, special_subset(p, SpecialKind::E), whole_ring(p));
  auto ann = annihilator(p, er, Side::left);
  CHECK(ann.members == std::vector<Index>{0, idx(p, "(0,1)")});

  std::mt19937 rng(5);
  for (auto const& spec : rings) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    CHECK(annihilator(fr, special_subset(fr, SpecialKind::U), Side::left).members ==
          std::vector<Index>{0});
    for (int trial = 0; trial < 10; ++trial) {
      auto x   = raw_set(fr, random_seed(fr, rng, 2));
      auto xp  = closure(fr, x, ClosureKind::additive);
      for (auto side : {Side::left, Side::right}) {
        auto a = annihilator(fr, x, side);
        CHECK(a.members == annihilator(fr, xp, side).members);
        for (Index y = 0; y < fr.size(); ++y) {
          bool kills = true;
          for (auto m : x.members) {
            kills = kills && (side == Side::left ? fr.mul(y, m) : fr.mul(m, y)) == 0;
          }
          CHECK(a.contains(y) == kills);
        }
      }
    }
  }
}

TEST_CASE("set predicates") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  CHECK(set_predicates(m2, special_subset(m2, SpecialKind::E)).is_lie_ideal);
  CHECK_FALSE(set_predicates(m2, raw_set(m2, {idx(m2, "e(1,1)")})).is_special_invariant);
  CHECK(set_predicates(m2, special_subset(m2, SpecialKind::U)).is_special_invariant);
  CHECK(set_predicates(m2, special_subset(m2, SpecialKind::Z)).is_central);
  CHECK_FALSE(set_predicates(m2, whole_ring(m2)).is_central);
  CHECK(set_predicates(m2, special_subset(m2, SpecialKind::N)).is_special_invariant);
}

TEST_CASE("center dimension") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       d = center_dimension(m2, whole_ring(m2));
  CHECK(d.center_size == 2);
  CHECK(d.dim_R_over_C == 4);
  auto l = closure(m2, {idx(m2, "I"), idx(m2, "[[0,1],[1,0]]")}, ClosureKind::additive);
  CHECK(center_dimension(m2, l).dim_LC_over_C == 2);

  FiniteRing m3(build_ring("M(2,GF(3))"));
  CHECK(center_dimension(m3, special_subset(m3, SpecialKind::Z)).dim_LC_over_C == 1);

  FiniteRing m4(build_ring("M(2,GF(4))"));
  auto       d4 = center_dimension(m4, whole_ring(m4));
  CHECK(d4.center_size == 4);
  CHECK(d4.dim_R_over_C == 4);

  FiniteRing z6(build_ring("Z(6)"));
  CHECK_THROWS_AS(center_dimension(z6, whole_ring(z6)), Error);
}

TEST_CASE("Lie ideal identities on every Lie ideal of small rings") {
  for (auto const* spec : {"M(2,GF(2))", "M(2,GF(3))", "UT(2,GF(3))", "prod(M(2,GF(2)),GF(2))"}) {
    CAPTURE(std::string(spec));
    FiniteRing fr(build_ring(spec));
    auto       r   = whole_ring(fr);
    auto       e   = special_subset(fr, SpecialKind::E);
    auto       er  = bracket_set(fr, e, r);
    CHECK(set_predicates(fr, e).is_lie_ideal);
    CHECK(is_subset(er, closure(fr, special_subset(fr, SpecialKind::U), ClosureKind::additive)));
    CHECK(er.members == bracket_set(fr, e, e).members);
    for (auto const& l : enumerate_additive_subgroups(fr, LatticeFilter::lie_ideals)) {
      auto ll  = bracket_set(fr, l, l);
      auto ill = closure(fr, ll, ClosureKind::ideal);
      CHECK(is_subset(ill, join(fr, l, product_set(fr, l, l))));
      auto lr = bracket_set(fr, l, r);
      CHECK(is_subset(bracket_set(fr, ill, r), lr));
      CHECK(is_subset(lr, l));
    }
  }
}
