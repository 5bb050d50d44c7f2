#ifndef TORSLAB_BITSET_HPP
#define TORSLAB_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace torslab {

// Fixed-capacity dynamic bitset. Lattices here have at most a few hundred
// elements, so a flat word vector beats anything fancier.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }
  void fill() {
    for (auto& w : w_) w = ~uint64_t{0};
    trim();
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  bool subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // -1 when exhausted
  int find_first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }
  int find_next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t k = size_t(i) >> 6;
    uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
    if (w) return int(k * 64) + std::countr_zero(w);
    for (++k; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace torslab

#endif
