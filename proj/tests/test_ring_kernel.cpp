#include <doctest.h>

#include <random>

#include "ringlab/error.hpp"
#include "ringlab/finite_ring.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/spec.hpp"

using namespace ringlab;

namespace {

  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no ringlab::Error thrown");
    return ErrorCode::internal;
  }

  std::vector<std::string> const small_catalog = {
      "Z(4)",         "Z(6)",        "GF(4)",       "GF(8)",         "GF(9)",
      "M(2,GF(2))",   "M(2,GF(3))",  "M(2,GF(4))",  "M(2,Z(4))",     "M(3,GF(2))",
      "UT(2,GF(2))",  "UT(2,GF(3))", "prod(M(2,GF(2)),GF(2))",       "prod(Z(2),Z(3))"};

  // naive oracle: product of matrices through the entry accessors
  Elem naive_matmul(Ring const& m, Elem const& a, Elem const& b) {
    auto              base = m.children()[0];
    auto              n    = m.matrix_size();
    std::vector<Elem> out;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto acc = base.zero();
        for (std::size_t k = 0; k < n; ++k) {
          acc = base.add(acc, base.mul(m.entry(a, i, k), m.entry(b, k, j)));
        }
        out.push_back(acc);
      }
    }
    return m.from_entries(out);
  }

  Elem laplace_det(Ring const& base, std::vector<Elem> const& a, std::size_t n) {
    if (n == 1) {
      return a[0];
    }
    auto acc = base.zero();
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<Elem> minor;
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (j != col) {
            minor.push_back(a[i * n + j]);
          }
        }
      }
      auto term = base.mul(a[col], laplace_det(base, minor, n - 1));
      acc       = col % 2 == 0 ? base.add(acc, term) : base.sub(acc, term);
    }
    return acc;
  }

  Elem random_elem(FiniteRing const& fr, std::mt19937& rng) {
    return fr.element(std::uniform_int_distribution<Index>(0, fr.size() - 1)(rng));
  }

}  // namespace

TEST_CASE("spec parsing and canonical text") {
  CHECK(to_string(parse_ring_spec("M( 2 , GF(3) )")) == "M(2,GF(3))");
  CHECK(to_string(parse_ring_spec("prod(GF(2),M(2,GF(2)),M(2,GF(3)))")) ==
        "prod(GF(2),M(2,GF(2)),M(2,GF(3)))");
  CHECK(build_ring("M(2,GF(2))").cardinality() == 16u);
  CHECK(build_ring("M(2,GF(2))").characteristic() == 2u);
  CHECK(build_ring("Z(6)").cardinality() == 6u);
  CHECK(build_ring("prod(M(2,GF(2)),GF(2))").cardinality() == 32u);
  CHECK(build_ring("UT(2,GF(3))").cardinality() == 27u);
  CHECK(build_ring("M(3,GF(2))").cardinality() == 512u);
  CHECK_FALSE(build_ring("M(2,FF(2))").enumerable());
  CHECK_FALSE(build_ring("M(2,FF(2))").cardinality().has_value());

  CHECK(code_of([] { build_ring("GF(6)"); }) == ErrorCode::invalid_spec);
  CHECK(code_of([] { build_ring("Z(1)"); }) == ErrorCode::invalid_spec);
  CHECK(code_of([] { build_ring("M(4,GF(2))"); }) == ErrorCode::invalid_spec);
  CHECK(code_of([] { build_ring("FF(3)"); }) == ErrorCode::invalid_spec);
  CHECK(code_of([] { build_ring("M(2,GF(2)"); }) == ErrorCode::parse);
  CHECK(code_of([] { build_ring("Q(2)"); }) == ErrorCode::parse);
  CHECK(code_of([] { build_ring("prod()"); }) != ErrorCode::internal);
}

TEST_CASE("element expressions") {
  auto m2 = build_ring("M(2,GF(2))");
  CHECK(m2.is_zero(evaluate(m2, "[[1,1],[1,1]]^2")));
  CHECK(evaluate(m2, "e(1,2)*e(2,1)") == evaluate(m2, "e(1,1)"));
  CHECK(evaluate(m2, "I") == m2.one());
  CHECK(m2.format(evaluate(m2, "e(1,2)+I")) == "[[1,1],[0,1]]");

  auto z4 = build_ring("Z(4)");
  CHECK(evaluate(z4, "3*3") == z4.one());
  CHECK(evaluate(z4, "1/3") == evaluate(z4, "3"));
  CHECK(code_of([&] { evaluate(z4, "1/2"); }) == ErrorCode::domain);
  CHECK(code_of([&] { evaluate(z4, "1 +"); }) == ErrorCode::parse);
  CHECK(code_of([&] { evaluate(m2, "[[1,0]]"); }) == ErrorCode::domain);

  auto gf8 = build_ring("GF(8)");
  CHECK(evaluate(gf8, "x^3") == evaluate(gf8, "x+1"));
  auto gf4 = build_ring("GF(4)");
  CHECK(evaluate(gf4, "x^2") == evaluate(gf4, "x+1"));
  CHECK(evaluate(gf4, "x^3") == gf4.one());

  auto ff = build_ring("M(2,FF(2))");
  auto b  = evaluate(ff, "[[1,1],[t,1]]");
  CHECK(ff.children()[0].format(determinant(ff, b)) == "t+1");
  CHECK(code_of([&] { enumerate_elements(ff); }) == ErrorCode::not_enumerable);
}

TEST_CASE("format and evaluate round-trip; canonical order") {
  for (auto const& spec : small_catalog) {
    CAPTURE(spec);
    auto ring  = build_ring(spec);
    auto elems = enumerate_elements(ring);
    REQUIRE(elems.size() == *ring.cardinality());
    CHECK(ring.is_zero(elems.front()));
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    std::size_t step = std::max<std::size_t>(1, elems.size() / 64);
    for (std::size_t i = 0; i < elems.size(); i += step) {
      CHECK(evaluate(ring, ring.format(elems[i])) == elems[i]);
    }
  }
}

TEST_CASE("ring axioms, exhaustive on small catalog rings") {
  for (auto const& spec : small_catalog) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    auto const n = fr.size();
    REQUIRE(n <= 512);
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      ok = fr.add(a, 0) == a && fr.mul(a, fr.one()) == a && fr.mul(fr.one(), a) == a &&
           fr.add(a, fr.neg(a)) == 0;
      for (Index b = 0; b < n && ok; ++b) {
        ok = fr.add(a, b) == fr.add(b, a);
        auto ab = fr.mul(a, b);
        for (Index c = 0; c < n && ok; ++c) {
          ok = fr.mul(ab, c) == fr.mul(a, fr.mul(b, c)) &&
               fr.mul(a, fr.add(b, c)) == fr.add(ab, fr.mul(a, c)) &&
               fr.mul(fr.add(b, c), a) == fr.add(fr.mul(b, a), fr.mul(c, a));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("characteristic and additive generators") {
  for (auto const& spec : small_catalog) {
    CAPTURE(spec);
    auto       ring = build_ring(spec);
    auto       ch   = ring.characteristic();
    CHECK(ring.is_zero(ring.from_int(static_cast<std::int64_t>(ch))));
    for (std::uint64_t k = 1; k < ch; ++k) {
      CHECK_FALSE(ring.is_zero(ring.from_int(static_cast<std::int64_t>(k))));
    }
    // the additive closure of the generators is the whole ring
    FiniteRing         fr(ring);
    std::vector<bool>  seen(fr.size(), false);
    std::vector<Index> frontier{0};
    seen[0] = true;
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (auto g : fr.generators()) {
        auto y = fr.add(x, g);
        if (!seen[y]) {
          seen[y] = true;
          frontier.push_back(y);
        }
      }
    }
    CHECK(std::count(seen.begin(), seen.end(), true) == static_cast<long>(fr.size()));
  }
}

TEST_CASE("matrix multiplication against the naive triple loop") {
  std::mt19937 rng(7);
  for (std::string spec : {"M(3,GF(2))", "M(2,Z(4))", "M(2,GF(9))", "M(3,GF(3))", "M(2,GF(4))"}) {
    CAPTURE(spec);
    auto ring = build_ring(spec);
    auto base = ring.children()[0];
    auto belems = enumerate_elements(base);
    auto n      = ring.matrix_size();
    auto random_matrix = [&] {
      std::vector<Elem> e;
      for (std::size_t i = 0; i < n * n; ++i) {
        e.push_back(belems[std::uniform_int_distribution<std::size_t>(0, belems.size() - 1)(rng)]);
      }
      return ring.from_entries(e);
    };
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_matrix(), b = random_matrix();
      CHECK(ring.mul(a, b) == naive_matmul(ring, a, b));
    }
  }
}

TEST_CASE("determinant against Laplace expansion") {
  std::mt19937 rng(11);
  for (std::string spec : {"M(3,GF(3))", "M(3,GF(4))", "M(2,GF(8))", "M(3,GF(5))"}) {
    CAPTURE(spec);
    auto ring   = build_ring(spec);
    auto base   = ring.children()[0];
    auto belems = enumerate_elements(base);
    auto n      = ring.matrix_size();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Elem> e;
      for (std::size_t i = 0; i < n * n; ++i) {
        e.push_back(belems[std::uniform_int_distribution<std::size_t>(0, belems.size() - 1)(rng)]);
      }
      CHECK(determinant(ring, ring.from_entries(e)) == laplace_det(base, e, n));
    }
  }
  auto z4 = build_ring("M(2,Z(4))");
  CHECK(code_of([&] { determinant(z4, z4.one()); }) == ErrorCode::domain);
}

TEST_CASE("inverses and products") {
  for (auto const& spec : small_catalog) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    auto const& ring = fr.ring();
    for (Index a = 0; a < fr.size(); ++a) {
      auto e   = fr.element(a);
      auto inv = ring.inverse(e);
      // brute force: a is a unit iff some b has ab = ba = 1
      bool unit = false;
      for (Index b = 0; b < fr.size() && !unit; ++b) {
        unit = fr.mul(a, b) == fr.one() && fr.mul(b, a) == fr.one();
      }
      CHECK(inv.has_value() == unit);
      if (inv) {
        CHECK(ring.mul(e, *inv) == ring.one());
      }
    }
  }

  auto p = build_ring("prod(Z(2),Z(3))");
  auto x = p.from_components({p.children()[0].one(), p.children()[1].from_int(2)});
  CHECK(p.component(p.mul(x, x), 1) == p.children()[1].one());
  CHECK(p.format(x) == "(1,2)");
}

TEST_CASE("FiniteRing tables agree with Ring arithmetic") {
  std::mt19937 rng(3);
  for (std::string spec : {"M(2,GF(3))", "M(3,GF(2))", "prod(GF(2),M(2,GF(2)),M(2,GF(3)))"}) {
    CAPTURE(spec);
    FiniteRing fr(build_ring(spec));
    for (int i = 0; i < 200; ++i) {
      auto a = random_elem(fr, rng), b = random_elem(fr, rng);
      CHECK(fr.element(fr.mul(fr.index_of(a), fr.index_of(b))) == fr.ring().mul(a, b));
      CHECK(fr.element(fr.add(fr.index_of(a), fr.index_of(b))) == fr.ring().add(a, b));
    }
  }
}
