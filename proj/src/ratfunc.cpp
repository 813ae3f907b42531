#include "ringlab/ratfunc.hpp"

#include <bit>

#include "ringlab/error.hpp"

namespace ringlab {

  ////////////////////////////////////////////////////////////////////////
  // Poly2
  ////////////////////////////////////////////////////////////////////////

  Poly2 Poly2::constant(bool c) {
    return from_bits(c ? 1 : 0);
  }

  Poly2 Poly2::monomial(unsigned k) {
    Poly2 p;
    p.set_coeff(k, true);
    return p;
  }

  Poly2 Poly2::from_bits(std::uint64_t bits) {
    Poly2 p;
    if (bits != 0) {
      p.words_.push_back(bits);
    }
    return p;
  }

  int Poly2::degree() const noexcept {
    if (words_.empty()) {
      return minus_infinity;
    }
    auto top = words_.back();
    return static_cast<int>(64 * (words_.size() - 1)) + 63
           - std::countl_zero(top);
  }

  bool Poly2::coeff(unsigned k) const noexcept {
    auto w = k / 64;
    return w < words_.size() && ((words_[w] >> (k % 64)) & 1u);
  }

  void Poly2::set_coeff(unsigned k, bool c) {
    auto w = k / 64;
    if (w >= words_.size()) {
      if (!c) {
        return;
      }
      words_.resize(w + 1, 0);
    }
    auto mask = std::uint64_t{1} << (k % 64);
    words_[w] = c ? (words_[w] | mask) : (words_[w] & ~mask);
    trim();
  }

  void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) {
      words_.pop_back();
    }
  }

  Poly2& Poly2::operator+=(Poly2 const& other) {
    if (other.words_.size() > words_.size()) {
      words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
      words_[i] ^= other.words_[i];
    }
    trim();
    return *this;
  }

  Poly2 operator*(Poly2 const& a, Poly2 const& b) {
    Poly2 out;
    if (a.is_zero() || b.is_zero()) {
      return out;
    }
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      for (unsigned bit = 0; bit < 64; ++bit) {
        if (((a.words_[i] >> bit) & 1u) == 0) {
          continue;
        }
        // shift b left by 64*i + bit and xor in
        for (std::size_t j = 0; j < b.words_.size(); ++j) {
          auto w = b.words_[j];
          out.words_[i + j] ^= w << bit;
          if (bit != 0) {
            out.words_[i + j + 1] ^= w >> (64 - bit);
          }
        }
      }
    }
    out.trim();
    return out;
  }

  std::pair<Poly2, Poly2> Poly2::divmod(Poly2 const& a, Poly2 const& b) {
    if (b.is_zero()) {
      throw Error(ErrorCode::domain, "polynomial division by zero");
    }
    Poly2 quotient;
    Poly2 rem = a;
    int   db  = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
      auto shift = static_cast<unsigned>(rem.degree() - db);
      quotient.set_coeff(shift, true);
      rem += b * monomial(shift);
    }
    return {quotient, rem};
  }

  Poly2 Poly2::gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
      a = a % b;
      std::swap(a, b);
    }
    return a;
  }

  Poly2 Poly2::derivative() const {
    Poly2 out;
    for (int k = 1; k <= degree(); k += 2) {
      if (coeff(static_cast<unsigned>(k))) {
        out.set_coeff(static_cast<unsigned>(k - 1), true);
      }
    }
    return out;
  }

  bool Poly2::only_even_terms() const noexcept {
    for (auto w : words_) {
      if (w & 0xAAAAAAAAAAAAAAAAull) {
        return false;
      }
    }
    return true;
  }

  Poly2 Poly2::even_root() const {
    if (!only_even_terms()) {
      throw Error(ErrorCode::domain,
                  "even_root of a polynomial with odd-degree terms");
    }
    Poly2 out;
    for (int k = 0; k <= degree(); k += 2) {
      if (coeff(static_cast<unsigned>(k))) {
        out.set_coeff(static_cast<unsigned>(k / 2), true);
      }
    }
    return out;
  }

  std::string Poly2::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (!coeff(static_cast<unsigned>(k))) {
        continue;
      }
      if (!out.empty()) {
        out += "+";
      }
      if (k == 0) {
        out += "1";
      } else if (k == 1) {
        out += "t";
      } else {
        out += "t^" + std::to_string(k);
      }
    }
    return out;
  }

  std::strong_ordering Poly2::operator<=>(Poly2 const& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) {
      return c;
    }
    for (auto i = words_.size(); i-- > 0;) {
      if (auto c = words_[i] <=> other.words_[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  ////////////////////////////////////////////////////////////////////////
  // RatFunc
  ////////////////////////////////////////////////////////////////////////

  RatFunc::RatFunc(Poly2 num)
      : num_(std::move(num)), den_(Poly2::constant(true)) {}

  RatFunc::RatFunc(Poly2 num, Poly2 den) {
    if (den.is_zero()) {
      throw Error(ErrorCode::domain, "rational function with zero denominator");
    }
    if (num.is_zero()) {
      den_ = Poly2::constant(true);
      return;
    }
    auto g = Poly2::gcd(num, den);
    num_   = num / g;
    den_   = den / g;
  }

  RatFunc RatFunc::inverse() const {
    if (is_zero()) {
      throw Error(ErrorCode::domain, "division by zero in FF(2)");
    }
    return RatFunc(den_, num_);
  }

  RatFunc operator+(RatFunc const& a, RatFunc const& b) {
    if (a.den_ == b.den_) {
      return RatFunc(a.num_ + b.num_, a.den_);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  RatFunc operator*(RatFunc const& a, RatFunc const& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }

  std::string RatFunc::to_string() const {
    auto wrap = [](Poly2 const& p) {
      auto s = p.to_string();
      return s.find('+') == std::string::npos ? s : "(" + s + ")";
    };
    if (den_.is_one()) {
      return num_.to_string();
    }
    return wrap(num_) + "/" + wrap(den_);
  }

}  // namespace ringlab
