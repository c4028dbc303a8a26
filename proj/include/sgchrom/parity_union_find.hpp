#pragma once

#include <cstdint>
#include <vector>

namespace sgc {

// Union-find where every vertex carries its sign relative to the root of its
// component. Uniting along an edge whose sign contradicts the stored
// parities marks the component unbalanced.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    parity_.assign(static_cast<std::size_t>(n), 0);
    unbalanced_.assign(static_cast<std::size_t>(n), 0);
    negative_.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) parent_[static_cast<std::size_t>(v)] = v;
    components_ = n;
    unbalanced_components_ = 0;
    components_with_negative_ = 0;
  }

  // `negative` is true for an edge of sign -1.
  void unite(int u, int v, bool negative) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    const std::uint8_t want = negative ? 1 : 0;
    if (ru == rv) {
      if (negative && !negative_[idx(ru)]) {
        negative_[idx(ru)] = 1;
        ++components_with_negative_;
      }
      if ((pu ^ pv) != want && !unbalanced_[idx(ru)]) {
        unbalanced_[idx(ru)] = 1;
        ++unbalanced_components_;
      }
      return;
    }
    const bool neg_before = negative_[idx(ru)] || negative_[idx(rv)];
    const bool neg_after = neg_before || negative;
    components_with_negative_ -= negative_[idx(ru)] + negative_[idx(rv)];
    components_with_negative_ += neg_after ? 1 : 0;
    const int unb = unbalanced_[idx(ru)] + unbalanced_[idx(rv)];
    unbalanced_components_ -= unb;
    unbalanced_components_ += unb > 0 ? 1 : 0;
    parent_[idx(rv)] = ru;
    parity_[idx(rv)] = static_cast<std::uint8_t>(pu ^ pv ^ want);
    negative_[idx(ru)] = neg_after ? 1 : 0;
    unbalanced_[idx(ru)] = unb > 0 ? 1 : 0;
    --components_;
  }

  int components() const noexcept { return components_; }
  int balanced_components() const noexcept { return components_ - unbalanced_components_; }
  // Components without a negative edge; isolated vertices count.
  int all_positive_components() const noexcept { return components_ - components_with_negative_; }

  struct Found {
    int root;
    std::uint8_t parity;
  };

  Found find(int v) {
    std::uint8_t p = 0;
    int r = v;
    while (parent_[idx(r)] != r) {
      p ^= parity_[idx(r)];
      r = parent_[idx(r)];
    }
    // Path compression with parity fix-up.
    std::uint8_t acc = p;
    int cur = v;
    while (parent_[idx(cur)] != cur) {
      const int next = parent_[idx(cur)];
      const std::uint8_t step = parity_[idx(cur)];
      parent_[idx(cur)] = r;
      parity_[idx(cur)] = acc;
      acc ^= step;
      cur = next;
    }
    return {r, p};
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  std::vector<int> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint8_t> unbalanced_;
  std::vector<std::uint8_t> negative_;
  int components_ = 0;
  int unbalanced_components_ = 0;
  int components_with_negative_ = 0;
};

}  // namespace sgc
