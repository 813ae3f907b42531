#include "ringlab/funcfield.hpp"

#include <algorithm>
#include <array>

#include "ringlab/error.hpp"
#include "ringlab/predicates.hpp"

namespace ringlab {

  std::vector<std::pair<Poly2, unsigned>> squarefree_factorization(Poly2 const& f) {
    if (f.is_zero()) {
      throw Error(ErrorCode::domain, "squarefree factorization of zero");
    }
    std::vector<std::pair<Poly2, unsigned>> out;
    if (f.degree() <= 0) {
      return out;
    }
    // Yun-style splitting of the part coprime to the derivative; what is
    // left over has only even-degree terms and is handled through its
    // square root.
    auto g = Poly2::gcd(f, f.derivative());
    auto w = f / g;
    for (unsigned i = 1; !w.is_one(); ++i) {
      auto y = Poly2::gcd(w, g);
      auto z = w / y;
      if (!z.is_one()) {
        out.emplace_back(z, i);
      }
      w = y;
      g = g / y;
    }
    if (!g.is_one()) {
      for (auto const& [h, m] : squarefree_factorization(g.even_root())) {
        out.emplace_back(h, 2 * m);
      }
    }
    return out;
  }

  bool is_square(RatFunc const& f) {
    if (f.is_zero()) {
      return true;
    }
    auto even = [](Poly2 const& p) {
      for (auto const& [g, m] : squarefree_factorization(p)) {
        if (m % 2 != 0) {
          return false;
        }
      }
      return true;
    };
    return even(f.numerator()) && even(f.denominator());
  }

  std::string to_string(Translates t) {
    switch (t) {
      case Translates::yes:
        return "yes";
      case Translates::no:
        return "no";
      case Translates::undecided:
        return "undecided";
    }
    return "?";
  }

  namespace {
    bool is_m2_ff(Ring const& ring) {
      auto const& s = ring.spec();
      return s.family == Family::matrix && s.param == 2
             && s.children[0].family == Family::func_field;
    }

    RatFunc f_entry(Ring const& ring, Elem const& a, std::size_t i, std::size_t j) {
      return ring.entry(a, i, j).fractions.at(0);
    }
  }  // namespace

  Translates translates_invertible(Ring const& ring, Elem const& a) {
    if (!is_m2_ff(ring)) {
      throw Error(ErrorCode::domain, "translates_invertible needs M(2,FF(2)), got " + ring.id());
    }
    auto tr = f_entry(ring, a, 0, 0) + f_entry(ring, a, 1, 1);
    if (!tr.is_zero()) {
      return Translates::undecided;
    }
    auto det = f_entry(ring, a, 0, 0) * f_entry(ring, a, 1, 1)
               + f_entry(ring, a, 0, 1) * f_entry(ring, a, 1, 0);
    return is_square(det) ? Translates::no : Translates::yes;
  }

  namespace {
    // Coordinates (α, β) of x in the 2-dimensional F-space
    // {[[α, β], [βη, α]]}, or nullopt if x lies outside it.
    std::optional<std::array<RatFunc, 2>> coords_in(Ring const& r, Elem const& x,
                                                    RatFunc const& eta) {
      auto alpha = f_entry(r, x, 0, 0);
      auto beta  = f_entry(r, x, 0, 1);
      if (!(f_entry(r, x, 1, 1) == alpha) || !(f_entry(r, x, 1, 0) == beta * eta)) {
        return std::nullopt;
      }
      return std::array<RatFunc, 2>{alpha, beta};
    }

    bool spans_plane(std::vector<std::array<RatFunc, 2>> const& vs) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          if (!(vs[i][0] * vs[j][1] - vs[i][1] * vs[j][0]).is_zero()) {
            return true;
          }
        }
      }
      return false;
    }

    std::vector<Elem> matrix_units(Ring const& r) {
      return {evaluate(r, "e(1,1)"), evaluate(r, "e(1,2)"), evaluate(r, "e(2,1)"),
              evaluate(r, "e(2,2)")};
    }

    bool brackets_vanish(Ring const& r, std::vector<Elem> const& xs) {
      for (auto const& x : xs) {
        for (auto const& y : xs) {
          if (!r.is_zero(r.bracket(x, y))) {
            return false;
          }
        }
      }
      return true;
    }

    CheckResult remark10i() {
      CheckResult res;
      res.check_id = "remark10i";
      res.ring     = "M(2,GF(2))";
      FiniteRing fr(build_ring(res.ring));
      auto       idx = [&](char const* e) { return fr.index_of(evaluate(fr.ring(), e)); };

      auto a = idx("[[1,1],[1,1]]");
      auto l = closure(fr, {idx("I"), idx("[[0,1],[1,0]]")}, ClosureKind::additive);
      res.expect("L has 4 elements", l.size() == 4);
      auto preds = set_predicates(fr, l);
      res.expect("L is a noncentral Lie ideal", preds.is_lie_ideal && !preds.is_central);
      res.expect("[L,L] = 0", bracket_set(fr, l, l).size() == 1);

      std::vector<Index> ar;
      for (auto g : fr.generators()) {
        ar.push_back(fr.bracket(a, g));
      }
      res.expect("L = [a,R]", closure(fr, ar, ClosureKind::additive) == l);
      res.expect("a in L and a^2 = 0", l.contains(a) && fr.mul(a, a) == 0);
      res.expect("aLa = 0 with a != 0", replay_witness(fr, l, {a}), fr.format(a));

      auto sp = x_semiprime(fr, l);
      res.expect("x_semiprime(R,L) fails with canonical witness a",
                 !sp.holds && sp.witness == std::vector<Index>{a},
                 sp.holds ? "" : fr.format(sp.witness[0]));
      auto pr = x_prime(fr, l);
      res.expect("x_prime(R,L) = false", !pr.holds,
                 pr.holds ? "" : fr.format(pr.witness[0]) + "; " + fr.format(pr.witness[1]));
      res.expect("pair (a,a) replays for x_prime", replay_witness(fr, l, {a, a}),
                 fr.format(a) + "; " + fr.format(a));
      res.predicted = "L_prime=false";
      res.observed  = std::string("L_prime=") + (pr.holds ? "true" : "false");
      return res;
    }

    CheckResult remark10ii() {
      CheckResult res;
      res.check_id = "remark10ii";
      res.ring     = "M(2,FF(2))";
      auto r       = build_ring(res.ring);
      auto eta     = RatFunc::t();

      res.expect("eta = t is not a square", !is_square(eta), "t");
      auto a = evaluate(r, "[[1,1],[t,1]]");
      std::vector<Elem> span{r.one(), evaluate(r, "[[0,1],[t,0]]")};

      res.expect("a in L", coords_in(r, a, eta).has_value());
      res.expect("[L,L] = 0 on spanning set", brackets_vanish(r, span));

      bool lie = true;
      for (auto const& x : span) {
        for (auto const& e : matrix_units(r)) {
          lie = lie && coords_in(r, r.bracket(x, e), eta).has_value();
        }
      }
      res.expect("[L,R] in L on spanning sets", lie);
      res.expect("L is noncentral",
                 !r.is_zero(r.bracket(span[1], evaluate(r, "e(1,1)"))));

      std::vector<std::array<RatFunc, 2>> coords;
      bool                                inside = true;
      for (auto const& e : matrix_units(r)) {
        auto c = coords_in(r, r.bracket(a, e), eta);
        inside = inside && c.has_value();
        if (c) {
          coords.push_back(*c);
        }
      }
      res.expect("L = [a,R]", inside && spans_plane(coords));

      auto ti = translates_invertible(r, a);
      res.expect("translates_invertible(a) = yes", ti == Translates::yes, to_string(ti));
      for (auto const* beta : {"0", "1", "t", "1/t", "t+1", "t^2+t+1", "(t^3+1)/(t^2+t+1)"}) {
        auto shifted = r.add(a, evaluate(r, std::string(beta) + "*I"));
        res.expect(std::string("det(a+beta) != 0 for beta = ") + beta,
                   !determinant(r, shifted).fractions[0].is_zero(), beta);
      }

      // case (ii) of the classification: exceptional (char 2, dimension 4),
      // [L,L] = 0, dim LC = 2, LC = [a,RC], translates invertible
      res.predicted = "L_prime=true";
      res.observed  = std::string("L_prime=")
                     + (res.sub_assertions.end()
                                == std::find_if(res.sub_assertions.begin(),
                                                res.sub_assertions.end(),
                                                [](auto const& s) { return !s.ok; })
                            ? "true"
                            : "false");
      return res;
    }

    CheckResult example4() {
      CheckResult res;
      res.check_id = "example4";
      res.ring     = "M(2,FF(2))";
      auto r       = build_ring(res.ring);
      auto one     = RatFunc::from_int(1);

      auto a = evaluate(r, "[[1,1],[1,1]]");
      auto b = evaluate(r, "[[1,1],[t,1]]");
      std::vector<Elem> span{r.one(), evaluate(r, "[[0,1],[1,0]]")};

      res.expect("eta = t is not a square", !is_square(RatFunc::t()), "t");
      res.expect("[L,L] = 0 on spanning set", brackets_vanish(r, span));
      bool closed = true;
      bool sandwich = true;
      for (auto const& x : span) {
        auto dx = r.bracket(b, x);
        closed  = closed && coords_in(r, dx, one).has_value();
        sandwich = sandwich && r.is_zero(r.mul(r.mul(a, dx), a))
                   && r.is_zero(r.mul(r.mul(a, x), a));
      }
      res.expect("d(L) in L on spanning set", closed);
      res.expect("aLa = 0 and a d(L) a = 0 with a != 0", sandwich && !r.is_zero(a),
                 r.format(a));

      auto ti = translates_invertible(r, b);
      res.expect("translates_invertible(b) = yes", ti == Translates::yes, to_string(ti));

      res.predicted = "dL_semiprime=false dR_semiprime=true";
      res.observed  = std::string("dL_semiprime=") + (sandwich ? "false" : "true")
                     + " dR_semiprime=" + (ti == Translates::yes ? "true" : "unknown");
      return res;
    }
  }  // namespace

  CheckResult exceptional_example_check(std::string const& case_id) {
    if (case_id == "remark10i") {
      return remark10i();
    }
    if (case_id == "remark10ii") {
      return remark10ii();
    }
    if (case_id == "example4") {
      return example4();
    }
    throw Error(ErrorCode::unknown_check, "unknown example case: " + case_id);
  }

}  // namespace ringlab
