// Permutations with descent statistics, unshuffle enumeration, and ordered
// partitions (compositions) of an integer.
#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "intform/rational.hpp"

namespace intform {

class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
#ifndef NDEBUG
    std::vector<int> seen(images_.size(), 0);
    for (int v : images_) {
      assert(v >= 1 && v <= static_cast<int>(images_.size()));
      assert(!seen[static_cast<size_t>(v - 1)]++);
    }
#endif
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }  // 1-based
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) inv[static_cast<size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  // (this o other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const {
    assert(size() == other.size());
    std::vector<int> v(images_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = (*this)(other.images_[i]);
    return Permutation(std::move(v));
  }

  // |{ i : sigma(i) > sigma(i+1) }|
  int descent_number() const {
    int d = 0;
    for (size_t i = 0; i + 1 < images_.size(); ++i)
      if (images_[i] > images_[i + 1]) ++d;
    return d;
  }

  // ascending within each block of positions, blocks given by their sizes
  bool is_unshuffle(std::span<const int> block_sizes) const {
    size_t pos = 0;
    for (int b : block_sizes) {
      for (int k = 1; k < b; ++k)
        if (images_[pos + static_cast<size_t>(k) - 1] > images_[pos + static_cast<size_t>(k)]) return false;
      pos += static_cast<size_t>(b);
    }
    assert(pos == images_.size());
    return true;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  static void for_each(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
  }

 private:
  std::vector<int> images_;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation::for_each(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

inline std::vector<Permutation> unshuffles(std::span<const int> block_sizes) {
  int n = 0;
  for (int b : block_sizes) {
    assert(b >= 1);
    n += b;
  }
  std::vector<Permutation> out;
  Permutation::for_each(n, [&](const Permutation& p) {
    if (p.is_unshuffle(block_sizes)) out.push_back(p);
  });
  return out;
}

// ordered partitions of n into positive parts
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      rec(rest - first);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

// ordered partitions of n into exactly k positive parts
inline std::vector<std::vector<int>> compositions_into(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int parts) {
    if (parts == 0) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int first = 1; first + parts - 1 <= rest; ++first) {
      cur.push_back(first);
      rec(rest - first, parts - 1);
      cur.pop_back();
    }
  };
  rec(n, k);
  return out;
}

}  // namespace intform
