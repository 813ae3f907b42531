#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/elem.hpp"
#include "ringlab/spec.hpp"

namespace ringlab {

  namespace detail {
    class Node;
  }

  //! A computable unital ring built from a RingSpec.
  //!
  //! Ring is a cheap handle onto an immutable tree of arithmetic nodes; copies
  //! share the tree. All arithmetic is exact. Elements are plain Elem values
  //! whose layout is determined by the ring (see Elem); passing an Elem built
  //! for a different ring is undefined.
  class Ring {
   public:
    RingSpec const& spec() const noexcept;
    //! Canonical spec text, used as the ring id in reports and sets.
    std::string const& id() const noexcept;

    std::uint64_t characteristic() const noexcept;
    //! nullopt for infinite rings.
    std::optional<std::uint64_t> cardinality() const noexcept;
    bool enumerable() const noexcept;

    //! Elements whose additive span is the whole ring; empty when the ring
    //! is not enumerable.
    std::vector<Elem> const& additive_generators() const noexcept;

    //! Radix of each digit of the encoding (enumerable rings only).
    std::vector<std::uint32_t> digit_radices() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(std::int64_t k) const;

    Elem add(Elem const& a, Elem const& b) const;
    Elem sub(Elem const& a, Elem const& b) const;
    Elem neg(Elem const& a) const;
    Elem mul(Elem const& a, Elem const& b) const;
    Elem pow(Elem const& a, std::uint64_t k) const;
    Elem bracket(Elem const& a, Elem const& b) const {
      return sub(mul(a, b), mul(b, a));
    }
    //! Two-sided inverse, or nullopt if `a` is not a unit.
    std::optional<Elem> inverse(Elem const& a) const;
    bool                is_zero(Elem const& a) const;

    //! Element-expression text that evaluate() maps back to `a`.
    std::string format(Elem const& a) const;

    // Structure of the top-level node.
    Family family() const noexcept;
    //! True for GF(q), FF(2) and Z(p) with p prime.
    bool is_field() const noexcept;
    //! Matrix size for M/UT rings, 0 otherwise.
    std::size_t matrix_size() const noexcept;
    //! Base ring of M/UT, factors of prod; empty for leaves.
    std::vector<Ring> children() const;

    //! Entry (i, j), zero-based, of an M/UT element.
    Elem entry(Elem const& a, std::size_t i, std::size_t j) const;
    //! Build an M element from row-major entries of the base ring.
    Elem from_entries(std::vector<Elem> const& entries) const;
    //! Component k of a prod element, and the embedding of a component.
    Elem component(Elem const& a, std::size_t k) const;
    Elem from_components(std::vector<Elem> const& parts) const;

   private:
    friend Ring build_ring(RingSpec const&);
    friend class ElementParser;
    friend Elem determinant(Ring const&, Elem const&);
    friend Elem trace(Ring const&, Elem const&);
    explicit Ring(std::shared_ptr<detail::Node const> root);

    std::shared_ptr<detail::Node const> root_;
  };

  //! Validates the spec and builds the ring; throws Error on bad parameters.
  Ring build_ring(RingSpec const& spec);
  Ring build_ring(std::string_view spec_text);

  //! Evaluates an element expression in `ring`:
  //!
  //!   signed integers, "t" (FF(2)), "x" (generator of GF(p^k)),
  //!   "[[a,b],[c,d]]" matrix literals, "(x,y,...)" product literals,
  //!   "e(i,j)" matrix units (one-based), "I", "0", "1",
  //!   binary + - * /, unary -, "^k" with k >= 0, parentheses.
  //!
  //! Throws Error{parse} on syntax errors and Error{domain} for dimension
  //! mismatches or division by a non-unit.
  Elem evaluate(Ring const& ring, std::string_view expr);

  //! All elements in canonical order; throws Error{not_enumerable} for rings
  //! containing FF(2) and Error{too_large} above 2^20 elements.
  std::vector<Elem> enumerate_elements(Ring const& ring);

  //! Determinant of a square matrix over a field, by Gaussian elimination.
  //! Throws Error{domain} unless `ring` is M(n, F) with F a field.
  Elem determinant(Ring const& ring, Elem const& a);

  //! Sum of diagonal entries of an M/UT element.
  Elem trace(Ring const& ring, Elem const& a);

}  // namespace ringlab
