#include "ringlab/spec.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ringlab/error.hpp"

namespace ringlab {

  namespace {
    constexpr std::uint64_t max_matrix_size  = 3;
    constexpr std::size_t   max_factors      = 4;
    constexpr std::uint64_t max_prime_field  = 1u << 15;
    constexpr std::uint64_t max_zmod_modulus = 1u << 30;

    class SpecParser {
     public:
      explicit SpecParser(std::string_view text) : text_(text) {}

      RingSpec parse() {
        RingSpec spec = ring();
        skip_space();
        if (pos_ != text_.size()) {
          fail("trailing characters");
        }
        return spec;
      }

     private:
      RingSpec ring() {
        skip_space();
        std::string head;
        while (pos_ < text_.size()
               && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
          head += text_[pos_++];
        }
        expect('(');
        RingSpec spec;
        if (head == "Z" || head == "GF" || head == "FF") {
          spec.family = head == "Z"    ? Family::zmod
                        : head == "GF" ? Family::gf
                                       : Family::func_field;
          spec.param = integer();
        } else if (head == "M" || head == "UT") {
          spec.family = head == "M" ? Family::matrix : Family::upper_tri;
          spec.param  = integer();
          expect(',');
          spec.children.push_back(ring());
        } else if (head == "prod") {
          spec.family = Family::product;
          spec.children.push_back(ring());
          while (peek() == ',') {
            ++pos_;
            spec.children.push_back(ring());
          }
        } else {
          fail("unknown ring family '" + head + "'");
        }
        expect(')');
        return spec;
      }

      std::uint64_t integer() {
        skip_space();
        std::uint64_t value = 0;
        auto const*   first = text_.data() + pos_;
        auto const*   last  = text_.data() + text_.size();
        auto [ptr, ec]      = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
          fail("expected an integer");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
      }

      char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      [[noreturn]] void fail(std::string const& msg) const {
        std::ostringstream os;
        os << "ring spec: " << msg << " at offset " << pos_ << " in \""
           << text_ << "\"";
        throw Error(ErrorCode::parse, os.str());
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };

    void invalid(RingSpec const& spec, std::string const& why) {
      throw Error(ErrorCode::invalid_spec,
                  "invalid ring spec " + to_string(spec) + ": " + why);
    }
  }  // namespace

  bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) {
      return {0, 0};
    }
    std::uint64_t p = 2;
    while (q % p != 0) {
      ++p;
    }
    unsigned k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    return q == 1 ? std::pair{p, k} : std::pair<std::uint64_t, unsigned>{0, 0};
  }

  bool is_supported_field_size(std::uint64_t q) {
    if (is_prime(q)) {
      return q < max_prime_field;
    }
    switch (q) {
      case 4:
      case 8:
      case 9:
      case 16:
      case 25:
      case 27:
        return true;
      default:
        return false;
    }
  }

  RingSpec parse_ring_spec(std::string_view text) {
    return SpecParser(text).parse();
  }

  void validate(RingSpec const& spec) {
    switch (spec.family) {
      case Family::zmod:
        if (spec.param < 2 || spec.param > max_zmod_modulus) {
          invalid(spec, "Z(n) requires 2 <= n <= 2^30");
        }
        break;
      case Family::gf:
        if (prime_power(spec.param).first == 0) {
          invalid(spec, "GF(q) requires q to be a prime power");
        }
        if (!is_supported_field_size(spec.param)) {
          invalid(spec, "GF(q) is implemented for primes and q in {4,8,9,16,25,27}");
        }
        break;
      case Family::matrix:
      case Family::upper_tri:
        if (spec.param < 1 || spec.param > max_matrix_size) {
          invalid(spec, "matrix size must be 1, 2 or 3");
        }
        if (spec.children.size() != 1) {
          invalid(spec, "matrix ring needs exactly one base ring");
        }
        break;
      case Family::product:
        if (spec.children.empty() || spec.children.size() > max_factors) {
          invalid(spec, "prod needs between 1 and 4 factors");
        }
        break;
      case Family::func_field:
        if (spec.param != 2) {
          invalid(spec, "only FF(2) is supported");
        }
        break;
    }
    for (auto const& child : spec.children) {
      validate(child);
    }
  }

  std::string to_string(RingSpec const& spec) {
    std::string out;
    switch (spec.family) {
      case Family::zmod:
        return "Z(" + std::to_string(spec.param) + ")";
      case Family::gf:
        return "GF(" + std::to_string(spec.param) + ")";
      case Family::func_field:
        return "FF(" + std::to_string(spec.param) + ")";
      case Family::matrix:
      case Family::upper_tri:
        out = spec.family == Family::matrix ? "M(" : "UT(";
        out += std::to_string(spec.param) + ",";
        out += spec.children.empty() ? "?" : to_string(spec.children.front());
        return out + ")";
      case Family::product:
        out = "prod(";
        for (std::size_t i = 0; i < spec.children.size(); ++i) {
          out += (i ? "," : "") + to_string(spec.children[i]);
        }
        return out + ")";
    }
    return out;
  }

  bool is_enumerable(RingSpec const& spec) {
    if (spec.family == Family::func_field) {
      return false;
    }
    for (auto const& child : spec.children) {
      if (!is_enumerable(child)) {
        return false;
      }
    }
    return true;
  }

}  // namespace ringlab
