#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace telepathy {

// Fixed-size bit set used for adjacency rows and candidate sets.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t size) : blocks_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void set_all() {
    for (auto& b : blocks_) b = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto b : blocks_) c += std::popcount(b);
    return c;
  }

  bool none() const {
    for (auto b : blocks_)
      if (b) return false;
    return true;
  }

  std::size_t count_and(const BitRow& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) c += std::popcount(blocks_[i] & other.blocks_[i]);
    return c;
  }

  BitRow& operator&=(const BitRow& other) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= other.blocks_[i];
    return *this;
  }
  BitRow& operator|=(const BitRow& other) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
    return *this;
  }
  BitRow& and_not(const BitRow& other) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~other.blocks_[i];
    return *this;
  }

  friend BitRow operator&(BitRow a, const BitRow& b) { return a &= b; }
  friend bool operator==(const BitRow&, const BitRow&) = default;

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t bi = from >> 6;
    std::uint64_t b = blocks_[bi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (b) return (bi << 6) + std::countr_zero(b);
      if (++bi == blocks_.size()) return size_;
      b = blocks_[bi];
    }
  }
  std::size_t first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
      std::uint64_t b = blocks_[bi];
      while (b) {
        f((bi << 6) + std::countr_zero(b));
        b &= b - 1;
      }
    }
  }

 private:
  void trim() {
    if (size_ & 63) blocks_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

}  // namespace telepathy
