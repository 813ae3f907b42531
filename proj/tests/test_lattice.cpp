#include <doctest.h>

#include <set>

#include "ringlab/error.hpp"
#include "ringlab/lattice.hpp"
#include "ringlab/subset_expr.hpp"

using namespace ringlab;

namespace {

  bool contains_set(std::vector<ElemSet> const& sets, ElemSet const& s) {
    return std::find(sets.begin(), sets.end(), s) != sets.end();
  }

}  // namespace

TEST_CASE("all additive subgroups of M(2,GF(2))") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       all = enumerate_additive_subgroups(m2, LatticeFilter::all);
  CHECK(all.size() == 67);
  std::set<std::vector<Index>> distinct;
  for (auto const& s : all) {
    distinct.insert(s.members);
    CHECK(closure(m2, s.members, ClosureKind::additive).members == s.members);
  }
  CHECK(distinct.size() == all.size());
}

TEST_CASE("Lie ideals of M(2,GF(2))") {
  FiniteRing m2(build_ring("M(2,GF(2))"));
  auto       lie = enumerate_additive_subgroups(m2, LatticeFilter::lie_ideals);
  for (auto const* expr : {"add{0}", "add{I}", "add{e(1,2),I}", "[R,R]", "add{I,[[0,1],[1,0]]}",
                           "R"}) {
    CAPTURE(std::string(expr));
    CHECK(contains_set(lie, evaluate_subset(m2, expr)));
  }
  for (auto const& l : lie) {
    CHECK(set_predicates(m2, l).is_lie_ideal);
  }
  auto noncentral = enumerate_additive_subgroups(m2, LatticeFilter::noncentral_lie_ideals);
  for (auto const& l : noncentral) {
    CHECK_FALSE(set_predicates(m2, l).is_central);
  }
  CHECK(noncentral.size() + 2 == lie.size());  // {0} and {0,I} are the central ones
}

TEST_CASE("abelian rings: every subgroup is a Lie ideal") {
  for (auto const* spec : {"GF(4)", "GF(8)", "Z(6)", "GF(9)"}) {
    CAPTURE(std::string(spec));
    FiniteRing fr(build_ring(spec));
    auto all = enumerate_additive_subgroups(fr, LatticeFilter::all);
    auto lie = enumerate_additive_subgroups(fr, LatticeFilter::lie_ideals);
    CHECK(lie.size() == all.size());
    CHECK(enumerate_additive_subgroups(fr, LatticeFilter::noncentral_lie_ideals).empty());
  }
}

TEST_CASE("lattice completeness against the all-subgroups filter") {
  for (auto const* spec : {"Z(4)", "Z(6)", "GF(4)", "GF(8)", "GF(9)", "M(2,GF(2))", "M(2,GF(3))",
                           "M(2,Z(4))", "UT(2,GF(2))", "UT(2,GF(3))", "prod(M(2,GF(2)),GF(2))"}) {
    CAPTURE(std::string(spec));
    FiniteRing           fr(build_ring(spec));
    std::vector<ElemSet> brute;
    for (auto const& s : enumerate_additive_subgroups(fr, LatticeFilter::all)) {
      if (set_predicates(fr, s).is_lie_ideal) {
        brute.push_back(s);
      }
    }
    auto lie = enumerate_additive_subgroups(fr, LatticeFilter::lie_ideals);
    REQUIRE(lie.size() == brute.size());
    for (std::size_t i = 0; i < lie.size(); ++i) {
      CHECK(lie[i].members == brute[i].members);
    }
  }
}

TEST_CASE("size limits") {
  FiniteRing m4(build_ring("M(2,GF(4))"));
  try {
    enumerate_additive_subgroups(m4, LatticeFilter::all);
    FAIL("expected too_large");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
  CHECK(enumerate_additive_subgroups(m4, LatticeFilter::lie_ideals).size() == 15);

  FiniteRing m3(build_ring("M(3,GF(2))"));
  try {
    enumerate_additive_subgroups(m3, LatticeFilter::all);
    FAIL("expected too_large");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::too_large);
  }
}
