#include "alphaspec/enumerate.hpp"

#include <algorithm>

#include "alphaspec/error.hpp"

namespace alphaspec {

std::uint64_t digraph_code(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > 8) throw InvalidArgument("digraph_code supports n <= 8");
  std::uint64_t code = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d.has_arc(i, j)) code |= std::uint64_t{1} << k;
      ++k;
    }
  return code;
}

Digraph digraph_from_code(std::size_t n, std::uint64_t code) {
  if (n == 0 || n > 8) throw InvalidArgument("digraph_from_code supports 1 <= n <= 8");
  std::vector<Digraph::Arc> arcs;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((code >> k) & 1u) arcs.emplace_back(i, j);
      ++k;
    }
  return Digraph::from_arcs(n, arcs);
}

std::vector<std::pair<std::size_t, std::size_t>> prufer_decode(std::size_t n,
                                                               const std::vector<std::size_t>& seq) {
  if (n < 2 || seq.size() != n - 2) throw InvalidArgument("Prüfer sequence must have length n-2");
  std::vector<std::size_t> degree(n, 1);
  for (auto x : seq) {
    if (x >= n) throw InvalidArgument("Prüfer label out of range");
    ++degree[x];
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(n - 1);
  for (auto x : seq) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
    --degree[leaf];
    --degree[x];
  }
  std::size_t u = n, v = n;
  for (std::size_t i = 0; i < n; ++i)
    if (degree[i] == 1) (u == n ? u : v) = i;
  edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

AllDigraphs::AllDigraphs(std::size_t n) : n_(n) {
  if (n < 1 || n > 5) throw InvalidArgument("all_digraphs supports 1 <= n <= 5, got " + std::to_string(n));
}

AllOrientedTrees::AllOrientedTrees(std::size_t n) : n_(n), trees_(1) {
  if (n < 2 || n > 7)
    throw InvalidArgument("all_oriented_trees supports 2 <= n <= 7, got " + std::to_string(n));
  for (std::size_t i = 0; i + 2 < n; ++i) trees_ *= n;
}

std::vector<std::pair<std::size_t, std::size_t>> AllOrientedTrees::tree_edges(std::uint64_t tree) const {
  std::vector<std::size_t> seq(n_ - 2);
  for (std::size_t i = seq.size(); i-- > 0;) {
    seq[i] = static_cast<std::size_t>(tree % n_);
    tree /= n_;
  }
  return prufer_decode(n_, seq);
}

Digraph AllOrientedTrees::at(std::uint64_t index) const {
  const std::uint64_t mask = index & ((std::uint64_t{1} << (n_ - 1)) - 1);
  const auto edges = tree_edges(index >> (n_ - 1));
  std::vector<Digraph::Arc> arcs;
  arcs.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if ((mask >> e) & 1u)
      arcs.emplace_back(u, v);
    else
      arcs.emplace_back(v, u);
  }
  return Digraph::from_arcs(n_, arcs);
}

}  // namespace alphaspec
