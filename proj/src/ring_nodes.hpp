#pragma once

// Arithmetic node tree behind ringlab::Ring. Each node operates on a window
// of an Elem's digit and fraction arrays; composite nodes slice the window
// for their children.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/elem.hpp"
#include "ringlab/spec.hpp"

namespace ringlab::detail {

  struct Width {
    std::size_t digits    = 0;
    std::size_t fractions = 0;

    Width operator+(Width o) const {
      return {digits + o.digits, fractions + o.fractions};
    }
    Width operator*(std::size_t k) const {
      return {digits * k, fractions * k};
    }
  };

  struct View {
    std::span<std::int32_t const> d;
    std::span<RatFunc const>      f;

    View sub(Width offset, Width w) const {
      return {d.subspan(offset.digits, w.digits),
              f.subspan(offset.fractions, w.fractions)};
    }
  };

  struct MutView {
    std::span<std::int32_t> d;
    std::span<RatFunc>      f;

    MutView sub(Width offset, Width w) const {
      return {d.subspan(offset.digits, w.digits),
              f.subspan(offset.fractions, w.fractions)};
    }
    operator View() const {  // NOLINT(runtime/explicit)
      return {d, f};
    }
  };

  inline View view(Elem const& e) {
    return {e.digits, e.fractions};
  }
  inline MutView mut(Elem& e) {
    return {e.digits, e.fractions};
  }

  inline Elem blank(Width w) {
    Elem e;
    e.digits.assign(w.digits, 0);
    e.fractions.assign(w.fractions, RatFunc());
    return e;
  }

  inline Elem copy_of(View v) {
    return Elem{{v.d.begin(), v.d.end()}, {v.f.begin(), v.f.end()}};
  }

  inline void assign(MutView out, View in) {
    std::copy(in.d.begin(), in.d.end(), out.d.begin());
    std::copy(in.f.begin(), in.f.end(), out.f.begin());
  }

  class Node {
   public:
    explicit Node(RingSpec spec);
    virtual ~Node() = default;

    RingSpec                     spec;
    std::string                  id;
    Width                        width;
    std::uint64_t                characteristic = 0;
    std::optional<std::uint64_t> cardinality;  // nullopt: infinite
    bool                         field = false;
    //! Additive generators, filled for the root of an enumerable ring.
    std::vector<Elem> generators;

    bool enumerable() const {
      return width.fractions == 0;
    }

    // Primitive operations. `out` must not alias the inputs of mul.
    virtual void set_int(std::int64_t k, MutView out) const  = 0;
    virtual void add(View a, View b, MutView out) const      = 0;
    virtual void neg(View a, MutView out) const              = 0;
    virtual void mul(View a, View b, MutView out) const      = 0;
    virtual void radices(std::vector<std::uint32_t>& out) const = 0;
    virtual std::vector<Elem> local_generators() const       = 0;
    virtual std::string       format(View a) const           = 0;
    virtual std::optional<Elem> inverse(View a) const;

    // Zero is the all-zero digit string with 0/1 fractions in every layout.
    bool is_zero(View a) const;

    // Whole-element conveniences.
    Elem zero() const {
      return blank(width);
    }
    Elem from_int(std::int64_t k) const;
    Elem add_e(Elem const& a, Elem const& b) const;
    Elem sub_e(Elem const& a, Elem const& b) const;
    Elem neg_e(Elem const& a) const;
    Elem mul_e(Elem const& a, Elem const& b) const;

   protected:
    // Exhaustive search for a two-sided inverse; enumerable nodes only.
    std::optional<Elem> brute_force_inverse(View a) const;
  };

  using NodePtr = std::shared_ptr<Node const>;

  class ZmodNode final : public Node {
   public:
    explicit ZmodNode(RingSpec spec);

    std::int64_t modulus;

    void set_int(std::int64_t k, MutView out) const override;
    void add(View a, View b, MutView out) const override;
    void neg(View a, MutView out) const override;
    void mul(View a, View b, MutView out) const override;
    void radices(std::vector<std::uint32_t>& out) const override;
    std::vector<Elem>   local_generators() const override;
    std::string         format(View a) const override;
    std::optional<Elem> inverse(View a) const override;
  };

  //! GF(p^k) as F_p[x]/(m(x)). Digits pack coordinates as sum c_i p^i.
  class GFNode final : public Node {
   public:
    explicit GFNode(RingSpec spec);

    std::uint32_t prime;
    unsigned      degree;
    std::uint32_t order;
    //! Coefficients of the monic modulus m(x), lowest degree first
    //! (degree + 1 entries).
    std::vector<std::uint32_t> modulus;

    void set_int(std::int64_t k, MutView out) const override;
    void add(View a, View b, MutView out) const override;
    void neg(View a, MutView out) const override;
    void mul(View a, View b, MutView out) const override;
    void radices(std::vector<std::uint32_t>& out) const override;
    std::vector<Elem>   local_generators() const override;
    std::string         format(View a) const override;
    std::optional<Elem> inverse(View a) const override;

    //! Digit of the generator x (for k > 1) .
    std::int32_t generator_digit() const {
      return static_cast<std::int32_t>(prime);
    }

    std::int32_t add_digit(std::int32_t a, std::int32_t b) const {
      return add_[static_cast<std::size_t>(a) * order + b];
    }
    std::int32_t mul_digit(std::int32_t a, std::int32_t b) const {
      return mul_[static_cast<std::size_t>(a) * order + b];
    }

   private:
    std::vector<std::int32_t> add_;
    std::vector<std::int32_t> mul_;
    std::vector<std::int32_t> neg_;
    std::vector<std::int32_t> inv_;
  };

  class FuncFieldNode final : public Node {
   public:
    explicit FuncFieldNode(RingSpec spec);

    void set_int(std::int64_t k, MutView out) const override;
    void add(View a, View b, MutView out) const override;
    void neg(View a, MutView out) const override;
    void mul(View a, View b, MutView out) const override;
    void radices(std::vector<std::uint32_t>& out) const override;
    std::vector<Elem>   local_generators() const override;
    std::string         format(View a) const override;
    std::optional<Elem> inverse(View a) const override;
  };

  //! M(n, base) or, with `upper`, UT(n, base). UT stores the n(n+1)/2
  //! entries on and above the diagonal, row-major.
  class MatrixNode final : public Node {
   public:
    MatrixNode(RingSpec spec, NodePtr base);

    NodePtr     base;
    std::size_t n;
    bool        upper;

    bool has_entry(std::size_t i, std::size_t j) const {
      return !upper || i <= j;
    }
    //! Position of entry (i, j) among the stored entries.
    std::size_t slot(std::size_t i, std::size_t j) const;
    std::size_t stored_entries() const {
      return upper ? n * (n + 1) / 2 : n * n;
    }
    View entry(View a, std::size_t i, std::size_t j) const {
      return a.sub(base->width * slot(i, j), base->width);
    }
    MutView entry(MutView a, std::size_t i, std::size_t j) const {
      return a.sub(base->width * slot(i, j), base->width);
    }

    void set_int(std::int64_t k, MutView out) const override;
    void add(View a, View b, MutView out) const override;
    void neg(View a, MutView out) const override;
    void mul(View a, View b, MutView out) const override;
    void radices(std::vector<std::uint32_t>& out) const override;
    std::vector<Elem>   local_generators() const override;
    std::string         format(View a) const override;
    std::optional<Elem> inverse(View a) const override;

    //! Full n x n entry list (zeros below the diagonal for UT).
    std::vector<Elem> full_entries(View a) const;
  };

  class ProductNode final : public Node {
   public:
    ProductNode(RingSpec spec, std::vector<NodePtr> factors);

    std::vector<NodePtr> factors;
    std::vector<Width>   offsets;

    View part(View a, std::size_t k) const {
      return a.sub(offsets[k], factors[k]->width);
    }
    MutView part(MutView a, std::size_t k) const {
      return a.sub(offsets[k], factors[k]->width);
    }

    void set_int(std::int64_t k, MutView out) const override;
    void add(View a, View b, MutView out) const override;
    void neg(View a, MutView out) const override;
    void mul(View a, View b, MutView out) const override;
    void radices(std::vector<std::uint32_t>& out) const override;
    std::vector<Elem>   local_generators() const override;
    std::string         format(View a) const override;
    std::optional<Elem> inverse(View a) const override;
  };

  NodePtr make_node(RingSpec const& spec);

  //! Gauss-Jordan inverse of an n x n matrix (row-major entries) over a
  //! field node; nullopt if singular.
  std::optional<std::vector<Elem>> invert_over_field(Node const&       field,
                                                     std::vector<Elem> m,
                                                     std::size_t       n);

}  // namespace ringlab::detail
