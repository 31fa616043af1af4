#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace isonemal {

/// Disjoint sets where every element carries a parity relative to its root.
/// Used for orbit colouring, where a parity of 1 means "complementary colour".
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t size() const { return parent_.size(); }

  /// Root of v and the parity of v relative to it.
  std::pair<std::size_t, bool> find(std::size_t v) {
    bool par = false;
    std::size_t r = v;
    while (parent_[r] != r) {
      par = par != (parity_[r] != 0);
      r = parent_[r];
    }
    // path compression, recomputing parities along the way
    bool acc = par;
    while (parent_[v] != v) {
      const std::size_t next = parent_[v];
      const bool own = parity_[v] != 0;
      parent_[v] = r;
      parity_[v] = acc ? 1 : 0;
      acc = acc != own;
      v = next;
    }
    return {r, par};
  }

  /// Records parity(a) XOR parity(b) == rel. Returns false if that contradicts
  /// what is already known.
  bool unite(std::size_t a, std::size_t b, bool rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa != pb) == rel;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = ((pa != pb) != rel) ? 1 : 0;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

  bool same(std::size_t a, std::size_t b) { return find(a).first == find(b).first; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> parity_;
  std::vector<unsigned char> rank_;
};

}  // namespace isonemal
