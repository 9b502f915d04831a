#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace alphaspec {

/// Simple digraph on vertices 0..n-1: no loops, no parallel arcs.
///
/// Arcs are stored as one bit row per vertex, so degree queries are popcounts.
/// Values are immutable once built through the named constructors and can be
/// shared freely between threads.
class Digraph {
 public:
  using Arc = std::pair<std::size_t, std::size_t>;

  /// Discrete digraph on n >= 1 vertices.
  explicit Digraph(std::size_t n);

  /// Throws InvalidArgument on a loop, duplicate, or out-of-range endpoint.
  static Digraph from_arcs(std::size_t n, const std::vector<Arc>& arcs);

  std::size_t order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_arc(std::size_t u, std::size_t v) const noexcept {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  std::size_t out_degree(std::size_t u) const noexcept;
  std::size_t in_degree(std::size_t v) const noexcept;
  std::vector<std::size_t> out_degrees() const;
  std::vector<std::size_t> in_degrees() const;
  std::size_t max_out_degree() const;

  /// Arcs in row-major order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void set_arc(std::size_t u, std::size_t v) noexcept {
    bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// Named families

struct DirectedPath { std::size_t n; };
struct DirectedCycle { std::size_t n; };
/// All arcs from the first r vertices to the last s.
struct OrientedCompleteBipartite { std::size_t r, s; };
struct SymmetricComplete { std::size_t n; };
/// Undirected graph with every edge replaced by two opposite arcs.
struct SymmetricFromGraph {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};
/// Cayley graph on Z4 x Z4, connection set {+-(1,0), +-(0,1), +-(1,1)}.
struct Shrikhande {};
struct Discrete { std::size_t n; };

using FamilySpec = std::variant<DirectedPath, DirectedCycle, OrientedCompleteBipartite,
                                SymmetricComplete, SymmetricFromGraph, Shrikhande, Discrete>;

bool operator==(const SymmetricFromGraph& a, const SymmetricFromGraph& b);

/// Throws InvalidArgument when the family parameters are out of range.
Digraph make_family(const FamilySpec& spec);

/// Number of vertices of the family (validates parameters).
std::size_t family_order(const FamilySpec& spec);

/// Grammar: path:n, cycle:n, kbip:r,s, symk:n, shrikhande, discrete:n,
/// graph:n:u-v,u-v,...
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Structure

struct StructureFlags {
  bool is_discrete = false;
  std::optional<std::size_t> regular_degree;  ///< set iff every d+ = d- = k
  bool is_symmetric = false;
  bool is_permutation_digraph = false;        ///< every d+ = d- = 1
  struct OcbPart {
    std::size_t r, s, isolated;
    friend bool operator==(const OcbPart&, const OcbPart&) = default;
  };
  std::optional<OcbPart> ocb_plus_isolated;
  bool is_oriented_tree = false;
};

StructureFlags classify_structure(const Digraph& d);

Digraph transpose(const Digraph& d);

/// Block-diagonal union; vertices of parts[k] follow those of parts[k-1].
Digraph direct_sum(const std::vector<Digraph>& parts);

/// Relabel vertices: vertex v of d becomes perm[v].
Digraph relabel(const Digraph& d, const std::vector<std::size_t>& perm);

// ---------------------------------------------------------------------------
// Text formats

/// Edge-list document: "n a" then a lines "u v"; '#' lines are comments.
/// Errors carry the 1-based line number.
Digraph parse_digraph(std::string_view text);
std::string emit_digraph(const Digraph& d);

/// Compact reproducible encoding "n:b0b1b2..." where bit k is the k-th
/// off-diagonal position in row-major order.
std::string encode(const Digraph& d);
Digraph decode(std::string_view text);

}  // namespace alphaspec
