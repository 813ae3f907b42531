#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

  //! Polynomial over GF(2) in the indeterminate t.
  //!
  //! Bit i of the packed coefficient words is the coefficient of t^i (lowest
  //! degree first). The word vector never has trailing zero words, so equal
  //! polynomials have identical representations.
  class Poly2 {
   public:
    //! Degree reported for the zero polynomial.
    static constexpr int minus_infinity = std::numeric_limits<int>::min();

    Poly2() = default;

    static Poly2 constant(bool c);
    static Poly2 monomial(unsigned k);
    //! Low 64 coefficients given as a bit mask.
    static Poly2 from_bits(std::uint64_t bits);

    int  degree() const noexcept;
    bool coeff(unsigned k) const noexcept;
    bool is_zero() const noexcept {
      return words_.empty();
    }
    bool is_one() const noexcept {
      return words_.size() == 1 && words_[0] == 1;
    }

    Poly2& operator+=(Poly2 const& other);
    friend Poly2 operator+(Poly2 a, Poly2 const& b) {
      return a += b;
    }
    friend Poly2 operator-(Poly2 a, Poly2 const& b) {
      return a += b;
    }
    friend Poly2 operator*(Poly2 const& a, Poly2 const& b);

    //! Quotient and remainder; throws on division by zero.
    static std::pair<Poly2, Poly2> divmod(Poly2 const& a, Poly2 const& b);
    friend Poly2 operator/(Poly2 const& a, Poly2 const& b) {
      return divmod(a, b).first;
    }
    friend Poly2 operator%(Poly2 const& a, Poly2 const& b) {
      return divmod(a, b).second;
    }

    static Poly2 gcd(Poly2 a, Poly2 b);

    //! Formal derivative; in characteristic 2 only odd-degree terms survive.
    Poly2 derivative() const;

    //! For a polynomial with only even-degree terms, the g with g^2 = *this.
    Poly2 even_root() const;

    //! True iff every odd-degree coefficient vanishes.
    bool only_even_terms() const noexcept;

    std::string to_string() const;

    bool operator==(Poly2 const&) const = default;
    //! Degree first, then coefficients from the top down.
    std::strong_ordering operator<=>(Poly2 const& other) const;

   private:
    void trim();
    void set_coeff(unsigned k, bool c);

    std::vector<std::uint64_t> words_;
  };

  //! Element of the rational function field GF(2)(t) in canonical form:
  //! gcd(numerator, denominator) = 1, denominator nonzero (and automatically
  //! monic over GF(2)), zero represented as 0/1.
  class RatFunc {
   public:
    RatFunc() : den_(Poly2::constant(true)) {}
    RatFunc(Poly2 num);  // NOLINT(runtime/explicit)
    //! Reduces to canonical form; throws Error{domain} if den is zero.
    RatFunc(Poly2 num, Poly2 den);

    static RatFunc from_int(std::int64_t k) {
      return RatFunc(Poly2::constant(k % 2 != 0));
    }
    static RatFunc t() {
      return RatFunc(Poly2::monomial(1));
    }

    Poly2 const& numerator() const noexcept {
      return num_;
    }
    Poly2 const& denominator() const noexcept {
      return den_;
    }
    bool is_zero() const noexcept {
      return num_.is_zero();
    }

    //! Throws Error{domain} for zero.
    RatFunc inverse() const;

    friend RatFunc operator+(RatFunc const& a, RatFunc const& b);
    friend RatFunc operator-(RatFunc const& a, RatFunc const& b) {
      return a + b;
    }
    friend RatFunc operator*(RatFunc const& a, RatFunc const& b);
    friend RatFunc operator/(RatFunc const& a, RatFunc const& b) {
      return a * b.inverse();
    }
    RatFunc operator-() const {
      return *this;
    }

    //! Re-derives the canonical form from the stored pair.
    RatFunc normalized() const {
      return RatFunc(num_, den_);
    }

    std::string to_string() const;

    bool                 operator==(RatFunc const&) const = default;
    std::strong_ordering operator<=>(RatFunc const&) const = default;

   private:
    Poly2 num_;
    Poly2 den_;
  };

}  // namespace ringlab
