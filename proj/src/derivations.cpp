#include "ringlab/derivations.hpp"

#include "ringlab/error.hpp"
#include "span_builder.hpp"

namespace ringlab {

  ElemSet derivation_image(FiniteRing const& fr, Index b, ElemSet const& a) {
    SpanBuilder span(fr);
    for (auto x : a.spanning()) {
      span.add(fr.bracket(b, x));
    }
    return std::move(span).finish(ClosureKind::additive);
  }

  bool thm21_criterion(FiniteRing const& fr, Index b) {
    if (primeness(fr).kind != Primeness::prime) {
      throw Error(ErrorCode::hypothesis, fr.ring().id() + " is not prime");
    }
    return thm21_criterion(fr, b, special_subset(fr, SpecialKind::Z));
  }

  bool thm21_criterion(FiniteRing const& fr, Index b, ElemSet const& center) {
    for (auto beta : center.members) {
      auto t     = raw_set(fr, {fr.add(b, beta)});
      bool left  = annihilator(fr, t, Side::left).size() == 1;
      bool right = annihilator(fr, t, Side::right).size() == 1;
      if (!left && !right) {
        return false;
      }
    }
    return true;
  }

  bool cor2_criterion(Ring const& ring, Elem const& b) {
    auto children = ring.children();
    if (ring.family() != Family::matrix || children.empty() || !children[0].is_field()
        || !children[0].enumerable()) {
      throw Error(ErrorCode::domain,
                  "criterion needs M(n, F) over a finite field, got " + ring.id());
    }
    auto n = ring.matrix_size();
    for (auto const& beta : enumerate_elements(children[0])) {
      std::vector<Elem> scalar(n * n, children[0].zero());
      for (std::size_t i = 0; i < n; ++i) {
        scalar[i * n + i] = beta;
      }
      auto shifted = ring.add(b, ring.from_entries(scalar));
      if (children[0].is_zero(determinant(ring, shifted))) {
        return false;
      }
    }
    return true;
  }

  Verdict d_semiprime_oracle(FiniteRing const& fr, Index b, ElemSet const& a) {
    auto image = derivation_image(fr, b, a);
    if (image.size() == 1 && fr.size() > 1) {
      Verdict v;
      v.holds   = false;
      v.witness = {fr.one()};
      return v;
    }
    return x_semiprime(fr, image);
  }

}  // namespace ringlab
