#include "ringlab/subset_expr.hpp"

#include <cctype>
#include <charconv>

#include "ringlab/error.hpp"

namespace ringlab {

  namespace {
    class SubsetParser {
     public:
      SubsetParser(FiniteRing const& fr, std::string_view text, SetBindings const& bindings)
          : fr_(fr), text_(text), bindings_(bindings) {}

      ElemSet run() {
        auto s = set();
        if (peek() != '\0') {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return s;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw Error(ErrorCode::parse,
                    "subset expression, position " + std::to_string(pos_) + ": " + msg);
      }

      char peek() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      std::string identifier() {
        peek();
        auto start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      unsigned exponent() {
        peek();
        unsigned n     = 0;
        auto     first = text_.data() + pos_;
        auto [end, ec] = std::from_chars(first, text_.data() + text_.size(), n);
        if (ec != std::errc{} || n == 0) {
          fail("expected a positive integer");
        }
        pos_ += static_cast<std::size_t>(end - first);
        return n;
      }

      ElemSet set() {
        auto s = atom();
        while (peek() == '*') {
          ++pos_;
          s = product_set(fr_, s, atom());
        }
        return s;
      }

      // Element expressions between braces, split at top-level commas.
      std::vector<Index> element_list() {
        expect('{');
        std::vector<Index> out;
        int                depth = 0;
        auto               start = pos_;
        for (; pos_ < text_.size(); ++pos_) {
          char c = text_[pos_];
          if (c == '(' || c == '[' || c == '{') {
            ++depth;
          } else if ((c == ')' || c == ']') && depth > 0) {
            --depth;
          } else if (c == '}' && depth > 0) {
            --depth;
          } else if ((c == ',' || c == '}') && depth == 0) {
            auto piece = text_.substr(start, pos_ - start);
            if (piece.find_first_not_of(" \t") == std::string_view::npos) {
              fail("empty element in list");
            }
            out.push_back(fr_.index_of(evaluate(fr_.ring(), piece)));
            start = pos_ + 1;
            if (c == '}') {
              ++pos_;
              return out;
            }
          }
        }
        fail("unterminated '{'");
      }

      ElemSet atom() {
        char c = peek();
        if (c == '(') {
          ++pos_;
          auto s = set();
          expect(')');
          return s;
        }
        if (c == '[') {
          ++pos_;
          auto a = set();
          expect(',');
          auto b = set();
          expect(']');
          return bracket_set(fr_, a, b);
        }
        auto name = identifier();
        if (name.empty()) {
          fail(c == '\0' ? "unexpected end of input" : "expected a set");
        }
        if (name == "Id") {
          return special_subset(fr_, SpecialKind::Id);
        }
        if (name == "U") {
          return special_subset(fr_, SpecialKind::U);
        }
        if (name == "N") {
          return special_subset(fr_, SpecialKind::N);
        }
        if (name == "Z") {
          return special_subset(fr_, SpecialKind::Z);
        }
        if (name == "E") {
          return special_subset(fr_, SpecialKind::E);
        }
        if (name == "R") {
          return whole_ring(fr_);
        }
        if (name == "pow" || name == "elpow") {
          expect('(');
          auto s = set();
          expect(',');
          auto n = exponent();
          expect(')');
          return name == "pow" ? power_set(fr_, s, n) : elementwise_power(fr_, s, n);
        }
        if (name == "annl" || name == "annr") {
          expect('(');
          auto s = set();
          expect(')');
          return annihilator(fr_, s, name == "annl" ? Side::left : Side::right);
        }
        if (name == "add") {
          return closure(fr_, element_list(), ClosureKind::additive);
        }
        if (name == "lie") {
          return closure(fr_, element_list(), ClosureKind::lie);
        }
        if (name == "ideal") {
          return closure(fr_, element_list(), ClosureKind::ideal);
        }
        if (auto it = bindings_.find(name); it != bindings_.end()) {
          return it->second;
        }
        fail("unknown set '" + name + "'");
      }

      FiniteRing const&  fr_;
      std::string_view   text_;
      SetBindings const& bindings_;
      std::size_t        pos_ = 0;
    };
  }  // namespace

  ElemSet evaluate_subset(FiniteRing const& fr, std::string_view expr,
                          SetBindings const& bindings) {
    return SubsetParser(fr, expr, bindings).run();
  }

}  // namespace ringlab
