#include "leelab/node_set.hpp"

#include <algorithm>

namespace leelab {

NodeSet::NodeSet(std::size_t size, bool full) : size_(size), blocks_((size + 63) / 64, 0) {
  if (full) {
    std::fill(blocks_.begin(), blocks_.end(), ~std::uint64_t{0});
    if (size % 64 != 0) blocks_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  }
}

NodeSet NodeSet::from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
  NodeSet s(size);
  for (auto i : indices) s.set(i);
  return s;
}

std::size_t NodeSet::count() const {
  std::size_t c = 0;
  for (auto w : blocks_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool NodeSet::empty() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t NodeSet::next(std::size_t i) const {
  if (i >= size_) return npos;
  std::size_t b = i >> 6;
  std::uint64_t w = blocks_[b] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (w) return b * 64 + static_cast<std::size_t>(__builtin_ctzll(w));
    if (++b >= blocks_.size()) return npos;
    w = blocks_[b];
  }
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= other.blocks_[b];
  return *this;
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] |= other.blocks_[b];
  return *this;
}

NodeSet& NodeSet::subtract(const NodeSet& other) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] &= ~other.blocks_[b];
  return *this;
}

bool NodeSet::intersects(const NodeSet& other) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b] & other.blocks_[b]) return true;
  return false;
}

bool NodeSet::subset_of(const NodeSet& other) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b] & ~other.blocks_[b]) return false;
  return true;
}

std::size_t NodeSet::count_and(const NodeSet& other) const {
  std::size_t c = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    c += static_cast<std::size_t>(__builtin_popcountll(blocks_[b] & other.blocks_[b]));
  return c;
}

std::vector<std::size_t> NodeSet::indices() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool NodeSet::operator<(const NodeSet& other) const {
  if (size_ != other.size_) return size_ < other.size_;
  return blocks_ < other.blocks_;
}

std::size_t NodeSet::hash() const {
  // FNV-1a over the blocks.
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : blocks_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace leelab
