#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace p3c {

// Fixed-universe dynamic bitset used for vertex sets. All binary operations
// require both operands to share the same universe size.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) { assert(n >= 0); }

  static Bitset of(int n, std::initializer_list<int> bits) {
    Bitset b(n);
    for (int i : bits) b.set(i);
    return b;
  }

  static Bitset full(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= uint64_t(1) << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  // Set difference: bits of *this not in o.
  Bitset minus(const Bitset& o) const {
    assert(n_ == o.n_);
    Bitset r(*this);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }

  Bitset complement() const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // First set bit at index >= from, or -1.
  int find_next(int from) const {
    if (from >= n_) return -1;
    if (from < 0) from = 0;
    size_t wi = size_t(from) >> 6;
    uint64_t w = w_[wi] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) return int(wi * 64 + std::countr_zero(w));
      if (++wi == w_.size()) return -1;
      w = w_[wi];
    }
  }
  int find_first() const { return find_next(0); }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for (int i = find_first(); i >= 0; i = find_next(i + 1)) v.push_back(i);
    return v;
  }

  class const_iterator {
   public:
    const_iterator(const Bitset* b, int pos) : b_(b), pos_(pos) {}
    int operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = b_->find_next(pos_ + 1);
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

   private:
    const Bitset* b_;
    int pos_;
  };
  const_iterator begin() const { return {this, find_first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (n_ & 63));
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace p3c
