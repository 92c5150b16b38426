#ifndef CATPATHS_BITSET_HPP
#define CATPATHS_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace catpaths {

// Fixed-universe bitset sized at construction. Categories stay small
// (a few hundred elements), so word-parallel set algebra is enough.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }

  bool operator==(const Bitset &o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset &o) const { return !(*this == o); }

  bool intersects(const Bitset &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(static_cast<int>(i));
    return out;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : w_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
    return h;
  }

private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

} // namespace catpaths

#endif
