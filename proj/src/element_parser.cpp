#include <cctype>
#include <charconv>

#include "ring_nodes.hpp"
#include "ringlab/error.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

  // Recursive descent over the element grammar. Every production is parsed
  // against a context node: matrix literals switch to the base ring for their
  // entries, tuples switch to the product factors.
  class ElementParser {
   public:
    ElementParser(Ring const& ring, std::string_view text)
        : root_(*ring.root_), text_(text) {}

    Elem run() {
      auto e = expr(root_);
      skip_ws();
      if (pos_ != text_.size()) {
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
      }
      return e;
    }

   private:
    using Node = detail::Node;

    [[noreturn]] void fail(std::string const& msg) const {
      throw Error(ErrorCode::parse, "element expression, position "
                                        + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
      while (pos_ < text_.size()
             && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
    }

    char peek() {
      skip_ws();
      return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
      if (peek() == c) {
        ++pos_;
        return true;
      }
      return false;
    }

    void expect(char c) {
      if (!accept(c)) {
        fail(std::string("expected '") + c + "'");
      }
    }

    std::int64_t integer() {
      skip_ws();
      std::int64_t value = 0;
      auto const*  first = text_.data() + pos_;
      auto [ptr, ec]     = std::from_chars(first, text_.data() + text_.size(), value);
      if (ec == std::errc::result_out_of_range) {
        fail("integer literal out of range");
      }
      if (ec != std::errc() || ptr == first) {
        fail("expected an integer");
      }
      pos_ += static_cast<std::size_t>(ptr - first);
      return value;
    }

    Elem expr(Node const& ctx) {
      auto acc = term(ctx);
      for (;;) {
        if (accept('+')) {
          acc = ctx.add_e(acc, term(ctx));
        } else if (accept('-')) {
          acc = ctx.sub_e(acc, term(ctx));
        } else {
          return acc;
        }
      }
    }

    Elem term(Node const& ctx) {
      auto acc = unary(ctx);
      for (;;) {
        if (accept('*')) {
          acc = ctx.mul_e(acc, unary(ctx));
        } else if (accept('/')) {
          auto rhs = unary(ctx);
          auto inv = ctx.inverse(detail::view(rhs));
          if (!inv) {
            throw Error(ErrorCode::domain, "division by a non-unit of " + ctx.id);
          }
          acc = ctx.mul_e(acc, *inv);
        } else {
          return acc;
        }
      }
    }

    Elem unary(Node const& ctx) {
      if (accept('-')) {
        return ctx.neg_e(unary(ctx));
      }
      if (accept('+')) {
        return unary(ctx);
      }
      return power(ctx);
    }

    Elem power(Node const& ctx) {
      auto base = primary(ctx);
      if (!accept('^')) {
        return base;
      }
      auto k = integer();
      if (k < 0) {
        fail("negative exponent");
      }
      auto result = ctx.from_int(1);
      while (k != 0) {
        if (k & 1) {
          result = ctx.mul_e(result, base);
        }
        k >>= 1;
        if (k != 0) {
          base = ctx.mul_e(base, base);
        }
      }
      return result;
    }

    Elem primary(Node const& ctx) {
      auto c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        return ctx.from_int(integer());
      }
      if (c == '(') {
        return parenthesized(ctx);
      }
      if (c == '[') {
        return matrix_literal(ctx);
      }
      if (c == 'I') {
        ++pos_;
        return ctx.from_int(1);
      }
      if (c == 't' || c == 'x') {
        ++pos_;
        auto e = ctx.zero();
        if (!scalar_symbol(ctx, c, detail::mut(e))) {
          throw Error(ErrorCode::domain,
                      std::string("'") + c + "' is not an element of " + ctx.id);
        }
        return e;
      }
      if (c == 'e') {
        ++pos_;
        return matrix_unit(ctx);
      }
      if (c == '\0') {
        fail("unexpected end of input");
      }
      fail("unexpected '" + std::string(1, c) + "'");
    }

    // Writes the image of t (or x) under the diagonal embedding into `out`;
    // false if some leaf does not contain the symbol.
    static bool scalar_symbol(Node const& ctx, char symbol, detail::MutView out) {
      if (auto const* ff = dynamic_cast<detail::FuncFieldNode const*>(&ctx)) {
        (void) ff;
        if (symbol != 't') {
          return false;
        }
        out.f[0] = RatFunc::t();
        return true;
      }
      if (auto const* gf = dynamic_cast<detail::GFNode const*>(&ctx)) {
        if (symbol != 'x' || gf->degree < 2) {
          return false;
        }
        out.d[0] = gf->generator_digit();
        return true;
      }
      if (auto const* m = dynamic_cast<detail::MatrixNode const*>(&ctx)) {
        for (std::size_t i = 0; i < m->n; ++i) {
          if (!scalar_symbol(*m->base, symbol, m->entry(out, i, i))) {
            return false;
          }
        }
        return true;
      }
      if (auto const* p = dynamic_cast<detail::ProductNode const*>(&ctx)) {
        for (std::size_t k = 0; k < p->factors.size(); ++k) {
          if (!scalar_symbol(*p->factors[k], symbol, p->part(out, k))) {
            return false;
          }
        }
        return true;
      }
      return false;
    }

    Elem matrix_unit(Node const& ctx) {
      expect('(');
      auto i = integer();
      expect(',');
      auto j = integer();
      expect(')');
      auto const* m = dynamic_cast<detail::MatrixNode const*>(&ctx);
      if (m == nullptr) {
        throw Error(ErrorCode::domain, "e(i,j) used outside a matrix ring: " + ctx.id);
      }
      auto n = static_cast<std::int64_t>(m->n);
      if (i < 1 || j < 1 || i > n || j > n) {
        throw Error(ErrorCode::domain, "matrix unit index out of range for " + ctx.id);
      }
      auto r = static_cast<std::size_t>(i - 1);
      auto s = static_cast<std::size_t>(j - 1);
      if (!m->has_entry(r, s)) {
        throw Error(ErrorCode::domain, "e(i,j) below the diagonal in " + ctx.id);
      }
      auto e = ctx.zero();
      m->base->set_int(1, m->entry(detail::mut(e), r, s));
      return e;
    }

    Elem matrix_literal(Node const& ctx) {
      auto const* m = dynamic_cast<detail::MatrixNode const*>(&ctx);
      if (m == nullptr) {
        throw Error(ErrorCode::domain, "matrix literal in non-matrix ring " + ctx.id);
      }
      auto const& base = *m->base;
      auto        e    = ctx.zero();
      expect('[');
      for (std::size_t i = 0; i < m->n; ++i) {
        if (i > 0) {
          if (peek() == ']') {
            throw Error(ErrorCode::domain, "too few matrix rows for " + ctx.id);
          }
          expect(',');
        }
        expect('[');
        for (std::size_t j = 0; j < m->n; ++j) {
          if (j > 0) {
            if (peek() == ']') {
              throw Error(ErrorCode::domain, "matrix row too short for " + ctx.id);
            }
            expect(',');
          }
          auto entry = expr(base);
          if (m->has_entry(i, j)) {
            detail::assign(m->entry(detail::mut(e), i, j), detail::view(entry));
          } else if (!base.is_zero(detail::view(entry))) {
            throw Error(ErrorCode::domain,
                        "nonzero entry below the diagonal in " + ctx.id);
          }
        }
        if (peek() == ',') {
          throw Error(ErrorCode::domain, "matrix row too long for " + ctx.id);
        }
        expect(']');
      }
      if (peek() == ',') {
        throw Error(ErrorCode::domain, "too many matrix rows for " + ctx.id);
      }
      expect(']');
      return e;
    }

    // True if the parenthesized group starting at pos_ has a top-level comma.
    bool group_has_comma() const {
      int depth = 0;
      for (auto i = pos_; i < text_.size(); ++i) {
        auto c = text_[i];
        if (c == '(' || c == '[') {
          ++depth;
        } else if (c == ')' || c == ']') {
          if (--depth == 0) {
            return false;
          }
        } else if (c == ',' && depth == 1) {
          return true;
        }
      }
      return false;
    }

    Elem parenthesized(Node const& ctx) {
      skip_ws();
      if (!group_has_comma()) {
        expect('(');
        auto e = expr(ctx);
        expect(')');
        return e;
      }
      auto const* p = dynamic_cast<detail::ProductNode const*>(&ctx);
      if (p == nullptr) {
        throw Error(ErrorCode::domain, "tuple literal in non-product ring " + ctx.id);
      }
      expect('(');
      auto e = ctx.zero();
      for (std::size_t k = 0; k < p->factors.size(); ++k) {
        if (k > 0) {
          expect(',');
        }
        auto part = expr(*p->factors[k]);
        detail::assign(p->part(detail::mut(e), k), detail::view(part));
      }
      if (peek() == ',') {
        throw Error(ErrorCode::domain, "tuple has too many components for " + ctx.id);
      }
      expect(')');
      return e;
    }

    Node const&      root_;
    std::string_view text_;
    std::size_t      pos_ = 0;
  };

  Elem evaluate(Ring const& ring, std::string_view expr) {
    return ElementParser(ring, expr).run();
  }

}  // namespace ringlab
