#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace qlogic {

// Union by size with path halving. The representative of a class is
// arbitrary; canonical_classes() renumbers by least member.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  // Class id per element; ids ascend with the least member of each class.
  std::vector<int> canonical_classes() {
    std::vector<int> id(parent_.size(), -1), out(parent_.size());
    int next = 0;
    for (std::size_t x = 0; x < parent_.size(); ++x) {
      const std::size_t r = find(x);
      if (id[r] < 0) id[r] = next++;
      out[x] = id[r];
    }
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace qlogic
