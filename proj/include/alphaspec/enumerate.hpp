#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "alphaspec/digraph.hpp"

namespace alphaspec {

/// Off-diagonal bit code: bit k is the k-th pair (i, j), i != j, in row-major order.
/// Supported for n <= 8 (56 bits).
std::uint64_t digraph_code(const Digraph& d);
Digraph digraph_from_code(std::size_t n, std::uint64_t code);

/// Labeled Prüfer decoding: a sequence of n-2 labels in [0, n) to the n-1 edges
/// (u < v) of the corresponding tree, sorted.
std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(std::size_t n,
                                                               const std::vector<std::size_t>& seq);

/// Random-access view over a finite, deterministically ordered space of
/// digraphs. Index i always maps to the same digraph.
template <typename Space>
class SpaceIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Digraph;
  using difference_type = std::ptrdiff_t;

  SpaceIterator() = default;
  SpaceIterator(const Space* space, std::uint64_t index) : space_(space), index_(index) {}

  Digraph operator*() const { return space_->at(index_); }
  SpaceIterator& operator++() {
    ++index_;
    return *this;
  }
  SpaceIterator operator++(int) {
    auto tmp = *this;
    ++index_;
    return tmp;
  }
  friend bool operator==(const SpaceIterator& a, const SpaceIterator& b) {
    return a.index_ == b.index_;
  }

 private:
  const Space* space_ = nullptr;
  std::uint64_t index_ = 0;
};

/// All 2^(n(n-1)) labeled simple digraphs on n vertices, 1 <= n <= 5, in
/// increasing code order. Discrete first, complete symmetric last.
class AllDigraphs {
 public:
  explicit AllDigraphs(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << (n_ * (n_ - 1)); }
  Digraph at(std::uint64_t code) const { return digraph_from_code(n_, code); }

  SpaceIterator<AllDigraphs> begin() const { return {this, 0}; }
  SpaceIterator<AllDigraphs> end() const { return {this, size()}; }

 private:
  std::size_t n_;
};

/// Every labeled tree on n vertices (Prüfer order) times every orientation of
/// its edges: n^(n-2) * 2^(n-1) digraphs for 2 <= n <= 7. Index = tree * 2^(n-1) + mask;
/// mask bit e set means edge e (u < v) is oriented u -> v. Isomorphic copies
/// appear once per labeling.
class AllOrientedTrees {
 public:
  explicit AllOrientedTrees(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t tree_count() const noexcept { return trees_; }
  std::uint64_t size() const noexcept { return trees_ << (n_ - 1); }
  Digraph at(std::uint64_t index) const;

  /// Edge list of the index-th labeled tree.
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges(std::uint64_t tree) const;

  SpaceIterator<AllOrientedTrees> begin() const { return {this, 0}; }
  SpaceIterator<AllOrientedTrees> end() const { return {this, size()}; }

 private:
  std::size_t n_;
  std::uint64_t trees_;
};

}  // namespace alphaspec
