#include "ringlab/finite_ring.hpp"

#include "ringlab/error.hpp"

namespace ringlab {

  namespace {
    constexpr std::uint64_t max_size  = std::uint64_t{1} << 20;
    constexpr Index         max_table = 1024;
  }  // namespace

  FiniteRing::FiniteRing(Ring ring) : ring_(std::move(ring)) {
    if (!ring_.enumerable()) {
      throw Error(ErrorCode::not_enumerable, ring_.id() + " is not enumerable");
    }
    auto card = *ring_.cardinality();
    if (card > max_size) {
      throw Error(ErrorCode::too_large, ring_.id() + " has more than 2^20 elements");
    }
    size_    = static_cast<Index>(card);
    radices_ = ring_.digit_radices();
    one_     = index_of(ring_.one());
    for (auto const& g : ring_.additive_generators()) {
      generators_.push_back(index_of(g));
    }

    if (size_ > max_table) {
      return;
    }
    std::vector<Elem> elems;
    elems.reserve(size_);
    for (Index i = 0; i < size_; ++i) {
      elems.push_back(element(i));
    }
    add_table_.resize(std::size_t{size_} * size_);
    mul_table_.resize(std::size_t{size_} * size_);
    neg_table_.resize(size_);
    for (Index a = 0; a < size_; ++a) {
      neg_table_[a] = index_of(ring_.neg(elems[a]));
      for (Index b = 0; b < size_; ++b) {
        add_table_[std::size_t{a} * size_ + b] = index_of(ring_.add(elems[a], elems[b]));
        mul_table_[std::size_t{a} * size_ + b] = index_of(ring_.mul(elems[a], elems[b]));
      }
    }
  }

  Index FiniteRing::index_of(Elem const& e) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      idx = idx * radices_[i] + static_cast<std::uint32_t>(e.digits[i]);
    }
    return static_cast<Index>(idx);
  }

  Elem FiniteRing::element(Index i) const {
    Elem e;
    e.digits.resize(radices_.size());
    for (auto k = radices_.size(); k-- > 0;) {
      e.digits[k] = static_cast<std::int32_t>(i % radices_[k]);
      i /= radices_[k];
    }
    return e;
  }

  Index FiniteRing::add(Index a, Index b) const {
    if (!add_table_.empty()) {
      return add_table_[std::size_t{a} * size_ + b];
    }
    return index_of(ring_.add(element(a), element(b)));
  }

  Index FiniteRing::neg(Index a) const {
    if (!neg_table_.empty()) {
      return neg_table_[a];
    }
    return index_of(ring_.neg(element(a)));
  }

  Index FiniteRing::mul(Index a, Index b) const {
    if (!mul_table_.empty()) {
      return mul_table_[std::size_t{a} * size_ + b];
    }
    return index_of(ring_.mul(element(a), element(b)));
  }

  Index FiniteRing::pow(Index a, std::uint64_t k) const {
    Index result = one_;
    while (k != 0) {
      if (k & 1u) {
        result = mul(result, a);
      }
      k >>= 1;
      if (k != 0) {
        a = mul(a, a);
      }
    }
    return result;
  }

}  // namespace ringlab
