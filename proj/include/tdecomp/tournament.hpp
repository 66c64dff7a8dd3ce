#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tdecomp/error.hpp"

namespace tdecomp {

/// Subset of the vertex range 0..63 stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

/// A tournament on the vertices 0..n-1, n <= 64.
///
/// Every unordered pair carries exactly one orientation. The relation is
/// stored as out-neighbourhood masks, which makes "x -> Y" and
/// "Y -> x" tests single mask operations; antisymmetry and totality are
/// enforced by every constructor.
class Tournament {
 public:
  static constexpr int kMaxVertices = 64;

  /// The empty tournament.
  Tournament() = default;

  /// Build from a predicate deciding, for every i < j, whether i -> j.
  static Tournament from_predicate(int n, const std::function<bool(int, int)>& i_beats_j);
  /// Build from out-neighbourhood masks; throws on any antisymmetry or
  /// totality violation.
  static Tournament from_out_masks(std::vector<std::uint64_t> out);
  /// The usual total order i -> j for i < j.
  static Tournament total_order(int n);

  int size() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// True iff x -> y.
  bool arc(int x, int y) const { return (out_[x] >> y) & 1U; }
  VertexSet out(int x) const { return VertexSet(out_[x]); }
  VertexSet in(int x) const { return vertices() - out(x).with(x); }
  const std::vector<std::uint64_t>& out_masks() const { return out_; }

  /// A copy with the orientation of the pair {x, y} reversed.
  Tournament with_reversed(int x, int y) const;

  bool operator==(const Tournament&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> out_;
};

/// Checks antisymmetry, totality and the absence of loops over all pairs.
bool is_valid(const Tournament& t);

/// `arcs` must list exactly one orientation of every pair of distinct
/// vertices of 0..n-1.
Tournament make_tournament(int n, const std::vector<std::pair<int, int>>& arcs);

struct InducedTournament {
  Tournament tournament;
  /// labels[k] is the original vertex relabelled k (increasing).
  std::vector<int> labels;
};

/// T[X], relabelled to 0..|X|-1 preserving label order.
InducedTournament subtournament(const Tournament& t, VertexSet x);

Tournament dual(const Tournament& t);

VertexSet out_neighbors(const Tournament& t, int x);

/// Relabel: vertex v of `t` becomes perm[v].
Tournament relabel(const Tournament& t, const std::vector<int>& perm);

/// T[S] contains no 3-cycle.
bool is_transitive_on(const Tournament& t, VertexSet s);
bool is_transitive(const Tournament& t);

/// Throws VertexOutOfRange unless v is a vertex of t.
void check_vertex(const Tournament& t, int v);
void check_subset(const Tournament& t, VertexSet s);

/// Simple undirected graph on a subset of 0..63.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(VertexSet vertices, const std::vector<std::pair<int, int>>& edges);

  VertexSet vertices() const { return vertices_; }
  VertexSet neighbors(int x) const { return VertexSet(adj_[x]); }
  bool has_edge(int x, int y) const { return (adj_[x] >> y) & 1U; }
  int degree(int x) const { return neighbors(x).size(); }
  int edge_count() const;
  /// Edges {x, y} with x < y, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  /// G[S]
  UndirectedGraph induced(VertexSet s) const;

  bool operator==(const UndirectedGraph&) const = default;

 private:
  VertexSet vertices_;
  std::vector<std::uint64_t> adj_ = std::vector<std::uint64_t>(64, 0);
};

/// Components in increasing order of their least member.
std::vector<VertexSet> connected_components(const UndirectedGraph& g);

}  // namespace tdecomp
