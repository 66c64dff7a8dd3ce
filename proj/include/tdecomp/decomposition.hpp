#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdecomp/tournament.hpp"

namespace tdecomp {

/// I is an interval of T: every vertex outside I beats all of I or is beaten
/// by all of I.
bool is_interval(const Tournament& t, VertexSet interval);

/// Indecomposability of T[S] without relabelling. Sets of at most two
/// vertices are indecomposable (all their subsets are trivial intervals).
bool is_indecomposable_on(const Tournament& t, VertexSet s);
bool is_indecomposable(const Tournament& t);

/// Smallest interval of T[S] containing `seed` (seed must lie in S).
VertexSet interval_closure(const Tournament& t, VertexSet s, VertexSet seed);

/// All intervals other than the empty set, singletons and V, sorted by mask.
std::vector<VertexSet> nontrivial_intervals(const Tournament& t);

/// The non-critical vertices of an indecomposable T (|T| >= 3): those x for
/// which T - x stays indecomposable.
VertexSet support(const Tournament& t);

/// One element of the family q^T_X.
struct QBlock {
  enum class Kind { Ext, Minus, Plus, MinusOf, PlusOf };

  Kind kind = Kind::Ext;
  /// The core vertex u for MinusOf / PlusOf, -1 otherwise.
  int anchor = -1;

  static QBlock ext() { return {Kind::Ext, -1}; }
  static QBlock minus() { return {Kind::Minus, -1}; }
  static QBlock plus() { return {Kind::Plus, -1}; }
  static QBlock minus_of(int u) { return {Kind::MinusOf, u}; }
  static QBlock plus_of(int u) { return {Kind::PlusOf, u}; }

  /// "X-", "X+(2)", ...
  std::string name() const;

  bool operator==(const QBlock&) const = default;
  auto operator<=>(const QBlock&) const = default;
};

/// Classification of the vertices outside an indecomposable core X.
struct OutsidePartition {
  VertexSet core;
  VertexSet ext;
  VertexSet x_minus;
  VertexSet x_plus;
  std::map<int, VertexSet> per_u_minus;
  std::map<int, VertexSet> per_u_plus;

  /// <X> = X- u X+
  VertexSet uniform() const { return x_minus | x_plus; }
  /// X(u) = X-(u) u X+(u)
  VertexSet of(int u) const;
  VertexSet block(QBlock b) const;
  QBlock block_of(int x) const;
  /// Nonempty blocks of q^T_X, ordered Ext, X-, X+, X-(u), X+(u) by u.
  std::vector<std::pair<QBlock, VertexSet>> nonempty_blocks() const;
};

/// Requires |X| >= 3 and T[X] indecomposable.
OutsidePartition outside_partition(const Tournament& t, VertexSet core);

/// G^T_X on V \ X: {x, y} is an edge iff T[X u {x, y}] is indecomposable.
UndirectedGraph outside_graph(const Tournament& t, VertexSet core);

/// T[X] indecomposable and sigma(T) within X. Requires T indecomposable.
bool is_partially_critical(const Tournament& t, VertexSet core);

struct ComponentReport {
  VertexSet component;
  /// Half-blocks matched to the two sides of G_2n, when they are whole
  /// blocks of q^T_X.
  std::optional<QBlock> q1;
  std::optional<QBlock> q2;
  /// n for a component matching G_2n (half its size).
  int half_size = 0;
  /// G^T_X[Q] is isomorphic to G_2n with sides Q1, Q2.
  bool g2n_ok = false;
  /// The degree formula linking outside-graph degrees to block scores.
  bool degree_formula_ok = false;
  /// g2n_labels[i] is the vertex playing vertex i of G_2n.
  std::vector<int> g2n_labels;

  bool ok() const { return g2n_ok && degree_formula_ok; }
};

struct SayarReport {
  bool ok = false;
  bool ext_empty = false;
  bool transitivity_ok = false;
  std::vector<ComponentReport> components;
};

/// Evaluates the three conditions characterising T[X]-critical tournaments.
SayarReport check_sayar(const Tournament& t, VertexSet core);

/// (source, sink) of a transitive tournament.
std::pair<int, int> transitive_min_max(const Tournament& t);
/// min/max of T[S] for transitive T[S], as original labels.
std::pair<int, int> transitive_min_max_on(const Tournament& t, VertexSet s);

}  // namespace tdecomp
