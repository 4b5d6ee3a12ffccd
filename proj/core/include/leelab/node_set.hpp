#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace leelab {

// Fixed-universe bitset over node indices [0, size).
class NodeSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  NodeSet() = default;
  explicit NodeSet(std::size_t size, bool full = false);

  static NodeSet from_indices(std::size_t size, const std::vector<std::size_t>& indices);

  std::size_t universe() const { return size_; }
  bool test(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  std::size_t first() const { return next(0); }
  // Smallest member >= i, or npos.
  std::size_t next(std::size_t i) const;

  NodeSet& operator&=(const NodeSet& other);
  NodeSet& operator|=(const NodeSet& other);
  NodeSet& subtract(const NodeSet& other);
  bool intersects(const NodeSet& other) const;
  bool subset_of(const NodeSet& other) const;
  std::size_t count_and(const NodeSet& other) const;

  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::uint64_t w = blocks_[b];
      while (w) {
        f(b * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  bool operator==(const NodeSet& other) const = default;
  bool operator<(const NodeSet& other) const;

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const { return s.hash(); }
};

}  // namespace leelab
