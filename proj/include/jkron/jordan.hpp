#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "jkron/exactmat.hpp"
#include "jkron/rational.hpp"

namespace jkron {

/// Multiset of Jordan block sizes, kept in descending order.
using BlockSizes = std::vector<std::size_t>;

inline void sort_desc(BlockSizes& s) { std::sort(s.begin(), s.end(), std::greater<>()); }

inline BlockSizes& append(BlockSizes& into, const BlockSizes& more) {
  into.insert(into.end(), more.begin(), more.end());
  return into;
}

inline std::size_t total_size(const BlockSizes& s) {
  std::size_t t = 0;
  for (auto v : s)
    t += v;
  return t;
}

struct JordanBlock {
  Rational eig;
  std::size_t size = 1;
  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

/// A matrix in Jordan form given by its blocks. Canonical order: eigenvalue
/// ascending, then size descending.
class JordanSpec {
public:
  JordanSpec() = default;
  JordanSpec(std::initializer_list<JordanBlock> blocks) : JordanSpec(std::vector<JordanBlock>(blocks)) {}
  explicit JordanSpec(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) {
    for (const auto& b : blocks_)
      if (b.size == 0)
        throw InvalidSpec("Jordan block size must be positive");
    std::sort(blocks_.begin(), blocks_.end(), [](const JordanBlock& a, const JordanBlock& b) {
      if (a.eig != b.eig)
        return a.eig < b.eig;
      return a.size > b.size;
    });
  }

  const std::vector<JordanBlock>& blocks() const { return blocks_; }
  std::size_t dimension() const {
    std::size_t n = 0;
    for (const auto& b : blocks_)
      n += b.size;
    return n;
  }
  bool empty() const { return blocks_.empty(); }

  /// The explicit block-diagonal matrix.
  RationalMatrix matrix() const {
    std::vector<RationalMatrix> m;
    for (const auto& b : blocks_)
      m.push_back(jordan_block(b.eig, b.size));
    return direct_sum(m);
  }

  friend bool operator==(const JordanSpec&, const JordanSpec&) = default;

private:
  std::vector<JordanBlock> blocks_;
};

/// Jordan data of a matrix: eigenvalue -> block sizes (descending). Keys are
/// exact rationals, so equal eigenvalues from different sources always merge.
class JordanStructure {
public:
  void add(const Rational& eig, const BlockSizes& sizes) {
    if (sizes.empty())
      return;
    auto& s = entries_[eig];
    append(s, sizes);
    sort_desc(s);
  }
  void merge(const JordanStructure& other) {
    for (const auto& [eig, sizes] : other.entries_)
      add(eig, sizes);
  }

  const std::map<Rational, BlockSizes>& entries() const { return entries_; }
  std::size_t dimension() const {
    std::size_t n = 0;
    for (const auto& [eig, sizes] : entries_)
      n += total_size(sizes);
    return n;
  }
  std::size_t block_count() const {
    std::size_t n = 0;
    for (const auto& [eig, sizes] : entries_)
      n += sizes.size();
    return n;
  }
  const BlockSizes* find(const Rational& eig) const {
    auto it = entries_.find(eig);
    return it == entries_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const JordanStructure&, const JordanStructure&) = default;

private:
  std::map<Rational, BlockSizes> entries_;
};

} // namespace jkron
