#include "ringlab/ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "ring_nodes.hpp"
#include "ringlab/error.hpp"

namespace ringlab {
  namespace detail {

    namespace {
      constexpr std::uint64_t max_enumerated  = std::uint64_t{1} << 20;
      constexpr std::uint32_t max_field_table = 256;

      std::int64_t mod(std::int64_t k, std::int64_t n) {
        auto r = k % n;
        return r < 0 ? r + n : r;
      }

      std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
        std::uint64_t out = 1;
        for (std::size_t i = 0; i < exp; ++i) {
          if (out > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
          }
          out *= base;
        }
        return out;
      }

      std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
        // extended Euclid; returns 0 if gcd(a, n) != 1
        std::int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
        while (new_r != 0) {
          auto q = r / new_r;
          std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
          std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
        }
        return r == 1 ? mod(t, n) : 0;
      }

      std::vector<std::uint32_t> field_modulus(std::uint64_t q) {
        switch (q) {
          case 4:
            return {1, 1, 1};  // x^2 + x + 1
          case 8:
            return {1, 1, 0, 1};  // x^3 + x + 1
          case 9:
            return {1, 0, 1};  // x^2 + 1
          case 16:
            return {1, 1, 0, 0, 1};  // x^4 + x + 1
          case 25:
            return {2, 1, 1};  // x^2 + x + 2
          case 27:
            return {1, 2, 0, 1};  // x^3 + 2x + 1
          default:
            return {0, 1};  // prime field
        }
      }
    }  // namespace

    ////////////////////////////////////////////////////////////////////////
    // Node
    ////////////////////////////////////////////////////////////////////////

    Node::Node(RingSpec s) : spec(std::move(s)), id(to_string(spec)) {}

    bool Node::is_zero(View a) const {
      return std::all_of(a.d.begin(), a.d.end(), [](auto x) { return x == 0; })
             && std::all_of(a.f.begin(), a.f.end(),
                            [](auto const& x) { return x.is_zero(); });
    }

    Elem Node::from_int(std::int64_t k) const {
      auto out = zero();
      set_int(k, mut(out));
      return out;
    }

    Elem Node::add_e(Elem const& a, Elem const& b) const {
      auto out = zero();
      add(view(a), view(b), mut(out));
      return out;
    }

    Elem Node::neg_e(Elem const& a) const {
      auto out = zero();
      neg(view(a), mut(out));
      return out;
    }

    Elem Node::sub_e(Elem const& a, Elem const& b) const {
      return add_e(a, neg_e(b));
    }

    Elem Node::mul_e(Elem const& a, Elem const& b) const {
      auto out = zero();
      mul(view(a), view(b), mut(out));
      return out;
    }

    std::optional<Elem> Node::inverse(View a) const {
      return brute_force_inverse(a);
    }

    std::optional<Elem> Node::brute_force_inverse(View a) const {
      if (!enumerable() || !cardinality || *cardinality > max_enumerated) {
        throw Error(ErrorCode::too_large,
                    "no inverse algorithm for elements of " + id);
      }
      std::vector<std::uint32_t> rad;
      radices(rad);
      auto one  = from_int(1);
      auto cand = zero();
      auto prod = zero();
      for (std::uint64_t count = 0; count < *cardinality; ++count) {
        mul(a, view(cand), mut(prod));
        if (prod == one) {
          mul(view(cand), a, mut(prod));
          if (prod == one) {
            return cand;
          }
        }
        // increment, last digit least significant
        for (auto i = rad.size(); i-- > 0;) {
          if (static_cast<std::uint32_t>(++cand.digits[i]) < rad[i]) {
            break;
          }
          cand.digits[i] = 0;
        }
      }
      return std::nullopt;
    }

    ////////////////////////////////////////////////////////////////////////
    // Z(n)
    ////////////////////////////////////////////////////////////////////////

    ZmodNode::ZmodNode(RingSpec s)
        : Node(std::move(s)), modulus(static_cast<std::int64_t>(spec.param)) {
      width          = {1, 0};
      characteristic = spec.param;
      cardinality    = spec.param;
      field          = is_prime(spec.param);
    }

    void ZmodNode::set_int(std::int64_t k, MutView out) const {
      out.d[0] = static_cast<std::int32_t>(mod(k, modulus));
    }

    void ZmodNode::add(View a, View b, MutView out) const {
      out.d[0] = static_cast<std::int32_t>(
          (std::int64_t{a.d[0]} + b.d[0]) % modulus);
    }

    void ZmodNode::neg(View a, MutView out) const {
      out.d[0] = static_cast<std::int32_t>(mod(-std::int64_t{a.d[0]}, modulus));
    }

    void ZmodNode::mul(View a, View b, MutView out) const {
      out.d[0] = static_cast<std::int32_t>(
          (std::int64_t{a.d[0]} * b.d[0]) % modulus);
    }

    void ZmodNode::radices(std::vector<std::uint32_t>& out) const {
      out.push_back(static_cast<std::uint32_t>(modulus));
    }

    std::vector<Elem> ZmodNode::local_generators() const {
      return {from_int(1)};
    }

    std::string ZmodNode::format(View a) const {
      return std::to_string(a.d[0]);
    }

    std::optional<Elem> ZmodNode::inverse(View a) const {
      auto inv = inverse_mod(a.d[0], modulus);
      if (inv == 0 && modulus != 1) {
        return std::nullopt;
      }
      return from_int(inv);
    }

    ////////////////////////////////////////////////////////////////////////
    // GF(q)
    ////////////////////////////////////////////////////////////////////////

    GFNode::GFNode(RingSpec s) : Node(std::move(s)) {
      auto [p, k]    = prime_power(spec.param);
      prime          = static_cast<std::uint32_t>(p);
      degree         = k;
      order          = static_cast<std::uint32_t>(spec.param);
      modulus        = field_modulus(spec.param);
      width          = {1, 0};
      characteristic = p;
      cardinality    = spec.param;
      field          = true;

      if (order > max_field_table) {
        return;  // large prime field: direct modular arithmetic
      }
      auto coords = [&](std::uint32_t v) {
        std::vector<std::uint32_t> c(degree);
        for (unsigned i = 0; i < degree; ++i, v /= prime) {
          c[i] = v % prime;
        }
        return c;
      };
      auto pack = [&](std::vector<std::uint32_t> const& c) {
        std::uint32_t v = 0;
        for (unsigned i = degree; i-- > 0;) {
          v = v * prime + c[i];
        }
        return static_cast<std::int32_t>(v);
      };
      add_.resize(std::size_t{order} * order);
      mul_.resize(std::size_t{order} * order);
      neg_.resize(order);
      inv_.assign(order, -1);
      for (std::uint32_t a = 0; a < order; ++a) {
        auto ca = coords(a);
        for (std::uint32_t b = 0; b < order; ++b) {
          auto                       cb = coords(b);
          std::vector<std::uint32_t> sum(degree);
          for (unsigned i = 0; i < degree; ++i) {
            sum[i] = (ca[i] + cb[i]) % prime;
          }
          // schoolbook product, then reduce by the monic modulus
          std::vector<std::uint32_t> prod(2 * degree, 0);
          for (unsigned i = 0; i < degree; ++i) {
            for (unsigned j = 0; j < degree; ++j) {
              prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % prime;
            }
          }
          for (auto top = 2 * degree; top-- > degree;) {
            auto c = prod[top];
            if (c == 0) {
              continue;
            }
            prod[top] = 0;
            for (unsigned i = 0; i < degree; ++i) {
              auto& slot = prod[top - degree + i];
              slot       = (slot + prime - (c * modulus[i]) % prime) % prime;
            }
          }
          prod.resize(degree);
          add_[std::size_t{a} * order + b] = pack(sum);
          mul_[std::size_t{a} * order + b] = pack(prod);
        }
      }
      for (std::uint32_t a = 0; a < order; ++a) {
        for (std::uint32_t b = 0; b < order; ++b) {
          if (add_[std::size_t{a} * order + b] == 0) {
            neg_[a] = static_cast<std::int32_t>(b);
          }
          if (mul_[std::size_t{a} * order + b] == 1) {
            inv_[a] = static_cast<std::int32_t>(b);
          }
        }
      }
    }

    void GFNode::set_int(std::int64_t k, MutView out) const {
      out.d[0] = static_cast<std::int32_t>(mod(k, prime));
    }

    void GFNode::add(View a, View b, MutView out) const {
      if (add_.empty()) {
        out.d[0] = static_cast<std::int32_t>((std::int64_t{a.d[0]} + b.d[0])
                                             % prime);
      } else {
        out.d[0] = add_digit(a.d[0], b.d[0]);
      }
    }

    void GFNode::neg(View a, MutView out) const {
      if (neg_.empty()) {
        out.d[0] = static_cast<std::int32_t>(mod(-std::int64_t{a.d[0]}, prime));
      } else {
        out.d[0] = neg_[static_cast<std::size_t>(a.d[0])];
      }
    }

    void GFNode::mul(View a, View b, MutView out) const {
      if (mul_.empty()) {
        out.d[0] = static_cast<std::int32_t>((std::int64_t{a.d[0]} * b.d[0])
                                             % prime);
      } else {
        out.d[0] = mul_digit(a.d[0], b.d[0]);
      }
    }

    void GFNode::radices(std::vector<std::uint32_t>& out) const {
      out.push_back(order);
    }

    std::vector<Elem> GFNode::local_generators() const {
      std::vector<Elem> gens;
      std::int32_t      v = 1;
      for (unsigned i = 0; i < degree; ++i, v *= static_cast<std::int32_t>(prime)) {
        gens.push_back(Elem{{v}, {}});
      }
      return gens;
    }

    std::string GFNode::format(View a) const {
      if (degree == 1 || a.d[0] == 0) {
        return std::to_string(a.d[0]);
      }
      std::vector<std::uint32_t> c(degree);
      auto                       v = static_cast<std::uint32_t>(a.d[0]);
      for (unsigned i = 0; i < degree; ++i, v /= prime) {
        c[i] = v % prime;
      }
      std::string out;
      for (unsigned i = degree; i-- > 0;) {
        if (c[i] == 0) {
          continue;
        }
        if (!out.empty()) {
          out += "+";
        }
        std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (mono.empty()) {
          out += std::to_string(c[i]);
        } else if (c[i] == 1) {
          out += mono;
        } else {
          out += std::to_string(c[i]) + "*" + mono;
        }
      }
      return out;
    }

    std::optional<Elem> GFNode::inverse(View a) const {
      if (a.d[0] == 0) {
        return std::nullopt;
      }
      if (inv_.empty()) {
        return Elem{{static_cast<std::int32_t>(inverse_mod(a.d[0], prime))}, {}};
      }
      return Elem{{inv_[static_cast<std::size_t>(a.d[0])]}, {}};
    }

    ////////////////////////////////////////////////////////////////////////
    // FF(2)
    ////////////////////////////////////////////////////////////////////////

    FuncFieldNode::FuncFieldNode(RingSpec s) : Node(std::move(s)) {
      width          = {0, 1};
      characteristic = 2;
      cardinality    = std::nullopt;
      field          = true;
    }

    void FuncFieldNode::set_int(std::int64_t k, MutView out) const {
      out.f[0] = RatFunc::from_int(k);
    }

    void FuncFieldNode::add(View a, View b, MutView out) const {
      out.f[0] = a.f[0] + b.f[0];
    }

    void FuncFieldNode::neg(View a, MutView out) const {
      out.f[0] = -a.f[0];
    }

    void FuncFieldNode::mul(View a, View b, MutView out) const {
      out.f[0] = a.f[0] * b.f[0];
    }

    void FuncFieldNode::radices(std::vector<std::uint32_t>&) const {
      throw Error(ErrorCode::not_enumerable, "FF(2) is not enumerable");
    }

    std::vector<Elem> FuncFieldNode::local_generators() const {
      return {};
    }

    std::string FuncFieldNode::format(View a) const {
      return a.f[0].to_string();
    }

    std::optional<Elem> FuncFieldNode::inverse(View a) const {
      if (a.f[0].is_zero()) {
        return std::nullopt;
      }
      return Elem{{}, {a.f[0].inverse()}};
    }

    ////////////////////////////////////////////////////////////////////////
    // M(n, base) and UT(n, base)
    ////////////////////////////////////////////////////////////////////////

    MatrixNode::MatrixNode(RingSpec s, NodePtr b)
        : Node(std::move(s)),
          base(std::move(b)),
          n(static_cast<std::size_t>(spec.param)),
          upper(spec.family == Family::upper_tri) {
      width          = base->width * stored_entries();
      characteristic = base->characteristic;
      if (base->cardinality) {
        cardinality = saturating_pow(*base->cardinality, stored_entries());
      }
      field = n == 1 && base->field;
    }

    std::size_t MatrixNode::slot(std::size_t i, std::size_t j) const {
      if (!upper) {
        return i * n + j;
      }
      // rows 0..i-1 hold n, n-1, ..., n-i+1 entries
      return i * n - i * (i - 1) / 2 + (j - i);
    }

    void MatrixNode::set_int(std::int64_t k, MutView out) const {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (has_entry(i, j)) {
            base->set_int(i == j ? k : 0, entry(out, i, j));
          }
        }
      }
    }

    void MatrixNode::add(View a, View b, MutView out) const {
      for (std::size_t s = 0; s < stored_entries(); ++s) {
        auto off = base->width * s;
        base->add(a.sub(off, base->width), b.sub(off, base->width),
                  out.sub(off, base->width));
      }
    }

    void MatrixNode::neg(View a, MutView out) const {
      for (std::size_t s = 0; s < stored_entries(); ++s) {
        auto off = base->width * s;
        base->neg(a.sub(off, base->width), out.sub(off, base->width));
      }
    }

    void MatrixNode::mul(View a, View b, MutView out) const {
      auto acc = base->zero();
      auto tmp = base->zero();
      auto sum = base->zero();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!has_entry(i, k)) {
            continue;
          }
          base->set_int(0, mut(acc));
          for (std::size_t j = 0; j < n; ++j) {
            if (!has_entry(i, j) || !has_entry(j, k)) {
              continue;
            }
            base->mul(entry(a, i, j), entry(b, j, k), mut(tmp));
            base->add(view(acc), view(tmp), mut(sum));
            std::swap(acc, sum);
          }
          assign(entry(out, i, k), view(acc));
        }
      }
    }

    void MatrixNode::radices(std::vector<std::uint32_t>& out) const {
      for (std::size_t s = 0; s < stored_entries(); ++s) {
        base->radices(out);
      }
    }

    std::vector<Elem> MatrixNode::local_generators() const {
      std::vector<Elem> gens;
      auto              base_gens = base->local_generators();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!has_entry(i, j)) {
            continue;
          }
          for (auto const& g : base_gens) {
            auto e = zero();
            assign(entry(mut(e), i, j), view(g));
            gens.push_back(std::move(e));
          }
        }
      }
      return gens;
    }

    std::string MatrixNode::format(View a) const {
      auto        zero_text = base->format(view(base->zero()));
      std::string out       = "[";
      for (std::size_t i = 0; i < n; ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < n; ++j) {
          out += j ? "," : "";
          out += has_entry(i, j) ? base->format(entry(a, i, j)) : zero_text;
        }
        out += "]";
      }
      return out + "]";
    }

    std::vector<Elem> MatrixNode::full_entries(View a) const {
      std::vector<Elem> out;
      out.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out.push_back(has_entry(i, j) ? copy_of(entry(a, i, j)) : base->zero());
        }
      }
      return out;
    }

    std::optional<Elem> MatrixNode::inverse(View a) const {
      if (!base->field) {
        return brute_force_inverse(a);
      }
      auto inv = invert_over_field(*base, full_entries(a), n);
      if (!inv) {
        return std::nullopt;
      }
      auto out = zero();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (has_entry(i, j)) {
            assign(entry(mut(out), i, j), view((*inv)[i * n + j]));
          }
        }
      }
      return out;
    }

    std::optional<std::vector<Elem>> invert_over_field(Node const&       f,
                                                       std::vector<Elem> m,
                                                       std::size_t       n) {
      std::vector<Elem> inv(n * n, f.zero());
      for (std::size_t i = 0; i < n; ++i) {
        inv[i * n + i] = f.from_int(1);
      }
      for (std::size_t col = 0; col < n; ++col) {
        auto pivot = col;
        while (pivot < n && f.is_zero(view(m[pivot * n + col]))) {
          ++pivot;
        }
        if (pivot == n) {
          return std::nullopt;
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m[pivot * n + j], m[col * n + j]);
          std::swap(inv[pivot * n + j], inv[col * n + j]);
        }
        auto scale = *f.inverse(view(m[col * n + col]));
        for (std::size_t j = 0; j < n; ++j) {
          m[col * n + j]   = f.mul_e(scale, m[col * n + j]);
          inv[col * n + j] = f.mul_e(scale, inv[col * n + j]);
        }
        for (std::size_t r = 0; r < n; ++r) {
          if (r == col || f.is_zero(view(m[r * n + col]))) {
            continue;
          }
          auto factor = m[r * n + col];
          for (std::size_t j = 0; j < n; ++j) {
            m[r * n + j]   = f.sub_e(m[r * n + j], f.mul_e(factor, m[col * n + j]));
            inv[r * n + j] = f.sub_e(inv[r * n + j], f.mul_e(factor, inv[col * n + j]));
          }
        }
      }
      return inv;
    }

    ////////////////////////////////////////////////////////////////////////
    // prod(...)
    ////////////////////////////////////////////////////////////////////////

    ProductNode::ProductNode(RingSpec s, std::vector<NodePtr> fs)
        : Node(std::move(s)), factors(std::move(fs)) {
      std::uint64_t card    = 1;
      bool          finite  = true;
      characteristic        = 1;
      for (auto const& f : factors) {
        offsets.push_back(width);
        width          = width + f->width;
        characteristic = std::lcm(characteristic, f->characteristic);
        if (!f->cardinality) {
          finite = false;
        } else if (card > std::numeric_limits<std::uint64_t>::max()
                              / *f->cardinality) {
          card = std::numeric_limits<std::uint64_t>::max();
        } else {
          card *= *f->cardinality;
        }
      }
      if (finite) {
        cardinality = card;
      }
      field = false;
    }

    void ProductNode::set_int(std::int64_t k, MutView out) const {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        factors[i]->set_int(k, part(out, i));
      }
    }

    void ProductNode::add(View a, View b, MutView out) const {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        factors[i]->add(part(a, i), part(b, i), part(out, i));
      }
    }

    void ProductNode::neg(View a, MutView out) const {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        factors[i]->neg(part(a, i), part(out, i));
      }
    }

    void ProductNode::mul(View a, View b, MutView out) const {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        factors[i]->mul(part(a, i), part(b, i), part(out, i));
      }
    }

    void ProductNode::radices(std::vector<std::uint32_t>& out) const {
      for (auto const& f : factors) {
        f->radices(out);
      }
    }

    std::vector<Elem> ProductNode::local_generators() const {
      std::vector<Elem> gens;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        for (auto const& g : factors[i]->local_generators()) {
          auto e = zero();
          assign(part(mut(e), i), view(g));
          gens.push_back(std::move(e));
        }
      }
      return gens;
    }

    std::string ProductNode::format(View a) const {
      std::string out = "(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? "," : "") + factors[i]->format(part(a, i));
      }
      return out + ")";
    }

    std::optional<Elem> ProductNode::inverse(View a) const {
      auto out = zero();
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto inv = factors[i]->inverse(part(a, i));
        if (!inv) {
          return std::nullopt;
        }
        assign(part(mut(out), i), view(*inv));
      }
      return out;
    }

    NodePtr make_node(RingSpec const& spec) {
      switch (spec.family) {
        case Family::zmod:
          return std::make_shared<ZmodNode>(spec);
        case Family::gf:
          return std::make_shared<GFNode>(spec);
        case Family::func_field:
          return std::make_shared<FuncFieldNode>(spec);
        case Family::matrix:
        case Family::upper_tri:
          return std::make_shared<MatrixNode>(spec, make_node(spec.children[0]));
        case Family::product: {
          std::vector<NodePtr> factors;
          for (auto const& c : spec.children) {
            factors.push_back(make_node(c));
          }
          return std::make_shared<ProductNode>(spec, std::move(factors));
        }
      }
      throw Error(ErrorCode::internal, "unknown ring family");
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Ring
  ////////////////////////////////////////////////////////////////////////

  namespace {
    detail::MatrixNode const* as_matrix(detail::Node const& node) {
      return dynamic_cast<detail::MatrixNode const*>(&node);
    }
    detail::ProductNode const* as_product(detail::Node const& node) {
      return dynamic_cast<detail::ProductNode const*>(&node);
    }
  }  // namespace

  Ring::Ring(std::shared_ptr<detail::Node const> root) : root_(std::move(root)) {}

  Ring build_ring(RingSpec const& spec) {
    validate(spec);
    auto root = std::const_pointer_cast<detail::Node>(detail::make_node(spec));
    if (root->enumerable()) {
      root->generators = root->local_generators();
    }
    return Ring(std::move(root));
  }

  Ring build_ring(std::string_view spec_text) {
    return build_ring(parse_ring_spec(spec_text));
  }

  RingSpec const& Ring::spec() const noexcept {
    return root_->spec;
  }
  std::string const& Ring::id() const noexcept {
    return root_->id;
  }
  std::uint64_t Ring::characteristic() const noexcept {
    return root_->characteristic;
  }
  std::optional<std::uint64_t> Ring::cardinality() const noexcept {
    return root_->cardinality;
  }
  bool Ring::enumerable() const noexcept {
    return root_->enumerable();
  }

  std::vector<Elem> const& Ring::additive_generators() const noexcept {
    return root_->generators;
  }

  std::vector<std::uint32_t> Ring::digit_radices() const {
    std::vector<std::uint32_t> out;
    root_->radices(out);
    return out;
  }

  Elem Ring::zero() const {
    return root_->zero();
  }
  Elem Ring::one() const {
    return root_->from_int(1);
  }
  Elem Ring::from_int(std::int64_t k) const {
    return root_->from_int(k);
  }
  Elem Ring::add(Elem const& a, Elem const& b) const {
    return root_->add_e(a, b);
  }
  Elem Ring::sub(Elem const& a, Elem const& b) const {
    return root_->sub_e(a, b);
  }
  Elem Ring::neg(Elem const& a) const {
    return root_->neg_e(a);
  }
  Elem Ring::mul(Elem const& a, Elem const& b) const {
    return root_->mul_e(a, b);
  }

  Elem Ring::pow(Elem const& a, std::uint64_t k) const {
    auto result = one();
    auto base   = a;
    while (k != 0) {
      if (k & 1u) {
        result = mul(result, base);
      }
      k >>= 1;
      if (k != 0) {
        base = mul(base, base);
      }
    }
    return result;
  }

  std::optional<Elem> Ring::inverse(Elem const& a) const {
    return root_->inverse(detail::view(a));
  }

  bool Ring::is_zero(Elem const& a) const {
    return root_->is_zero(detail::view(a));
  }

  std::string Ring::format(Elem const& a) const {
    return root_->format(detail::view(a));
  }

  Family Ring::family() const noexcept {
    return root_->spec.family;
  }

  bool Ring::is_field() const noexcept {
    return root_->field;
  }

  std::size_t Ring::matrix_size() const noexcept {
    auto const* m = as_matrix(*root_);
    return m ? m->n : 0;
  }

  std::vector<Ring> Ring::children() const {
    // rebuilt from the spec so that each child carries its own generators;
    // the element layout is the same as in the shared subtree
    std::vector<Ring> out;
    if (auto const* m = as_matrix(*root_)) {
      out.push_back(build_ring(m->base->spec));
    } else if (auto const* p = as_product(*root_)) {
      for (auto const& f : p->factors) {
        out.push_back(build_ring(f->spec));
      }
    }
    return out;
  }

  Elem Ring::entry(Elem const& a, std::size_t i, std::size_t j) const {
    auto const* m = as_matrix(*root_);
    if (m == nullptr || i >= m->n || j >= m->n) {
      throw Error(ErrorCode::domain, "entry(): not a matrix entry of " + id());
    }
    return m->has_entry(i, j) ? detail::copy_of(m->entry(detail::view(a), i, j))
                              : m->base->zero();
  }

  Elem Ring::from_entries(std::vector<Elem> const& entries) const {
    auto const* m = as_matrix(*root_);
    if (m == nullptr || entries.size() != m->n * m->n) {
      throw Error(ErrorCode::domain, "from_entries(): dimension mismatch for " + id());
    }
    auto out = zero();
    for (std::size_t i = 0; i < m->n; ++i) {
      for (std::size_t j = 0; j < m->n; ++j) {
        auto const& e = entries[i * m->n + j];
        if (m->has_entry(i, j)) {
          detail::assign(m->entry(detail::mut(out), i, j), detail::view(e));
        } else if (!m->base->is_zero(detail::view(e))) {
          throw Error(ErrorCode::domain,
                      "nonzero entry below the diagonal in " + id());
        }
      }
    }
    return out;
  }

  Elem Ring::component(Elem const& a, std::size_t k) const {
    auto const* p = as_product(*root_);
    if (p == nullptr || k >= p->factors.size()) {
      throw Error(ErrorCode::domain, "component(): not a product factor of " + id());
    }
    return detail::copy_of(p->part(detail::view(a), k));
  }

  Elem Ring::from_components(std::vector<Elem> const& parts) const {
    auto const* p = as_product(*root_);
    if (p == nullptr || parts.size() != p->factors.size()) {
      throw Error(ErrorCode::domain, "from_components(): arity mismatch for " + id());
    }
    auto out = zero();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      detail::assign(p->part(detail::mut(out), k), detail::view(parts[k]));
    }
    return out;
  }

  std::vector<Elem> enumerate_elements(Ring const& ring) {
    if (!ring.enumerable()) {
      throw Error(ErrorCode::not_enumerable,
                  ring.id() + " is infinite and cannot be enumerated");
    }
    auto card = *ring.cardinality();
    if (card > detail::max_enumerated) {
      throw Error(ErrorCode::too_large, ring.id() + " has more than 2^20 elements");
    }
    auto              rad = ring.digit_radices();
    std::vector<Elem> out;
    out.reserve(card);
    auto cur = ring.zero();
    for (std::uint64_t count = 0; count < card; ++count) {
      out.push_back(cur);
      for (auto i = rad.size(); i-- > 0;) {
        if (static_cast<std::uint32_t>(++cur.digits[i]) < rad[i]) {
          break;
        }
        cur.digits[i] = 0;
      }
    }
    return out;
  }

  Elem determinant(Ring const& ring, Elem const& a) {
    auto const* m = as_matrix(*ring.root_);
    if (m == nullptr || !m->base->field) {
      throw Error(ErrorCode::domain, "determinant needs a matrix ring over a field, got "
                                         + ring.id());
    }
    auto const& f   = *m->base;
    auto        n   = m->n;
    auto        rows = m->full_entries(detail::view(a));
    auto        det = f.from_int(1);
    for (std::size_t col = 0; col < n; ++col) {
      auto pivot = col;
      while (pivot < n && f.is_zero(detail::view(rows[pivot * n + col]))) {
        ++pivot;
      }
      if (pivot == n) {
        return f.zero();
      }
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(rows[pivot * n + j], rows[col * n + j]);
        }
        det = f.neg_e(det);
      }
      auto const& p = rows[col * n + col];
      det           = f.mul_e(det, p);
      auto p_inv    = *f.inverse(detail::view(p));
      for (std::size_t r = col + 1; r < n; ++r) {
        if (f.is_zero(detail::view(rows[r * n + col]))) {
          continue;
        }
        auto factor = f.mul_e(rows[r * n + col], p_inv);
        for (std::size_t j = col; j < n; ++j) {
          rows[r * n + j] = f.sub_e(rows[r * n + j], f.mul_e(factor, rows[col * n + j]));
        }
      }
    }
    return det;
  }

  Elem trace(Ring const& ring, Elem const& a) {
    auto const* m = as_matrix(*ring.root_);
    if (m == nullptr) {
      throw Error(ErrorCode::domain, "trace needs a matrix ring, got " + ring.id());
    }
    auto sum = m->base->zero();
    for (std::size_t i = 0; i < m->n; ++i) {
      sum = m->base->add_e(sum, detail::copy_of(m->entry(detail::view(a), i, i)));
    }
    return sum;
  }

}  // namespace ringlab
