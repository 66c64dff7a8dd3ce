#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tdecomp/tournament.hpp"

namespace tdecomp {

/// An embedding of P into T: image[p] is the vertex of T playing p.
std::optional<std::vector<int>> find_embedding(const Tournament& pattern, const Tournament& t);
bool embeds(const Tournament& pattern, const Tournament& t);

/// W5(T) together with one witness per member: the lexicographically least
/// 5-subset Z containing the vertex with T[Z] isomorphic to W5.
struct W5Report {
  VertexSet w5_vertices;
  /// witness[v] is empty for vertices outside W5(T).
  std::vector<VertexSet> witness;
};

W5Report w5_vertex_set(const Tournament& t);
/// Same set without witnesses.
VertexSet w5_vertices(const Tournament& t);
/// T[Z] is isomorphic to W5 for a 5-subset Z.
bool induces_w5(const Tournament& t, VertexSet five);

/// Indecomposable, at least 3 vertices, and |W5(T)| = |T| - 2.
bool is_family_t_member(const Tournament& t);

/// Minimum number of outside-graph components over the 3-cycle cores
/// sigma(T) u {x}, x in W5(T). Requires a family-T member.
int c_invariant(const Tournament& t);

/// No proper subset X with {x, y} inside and |X| >= 3 induces an
/// indecomposable tournament. Requires T indecomposable.
bool is_minimal_for_pair(const Tournament& t, int x, int y);

/// All pairs {x, y}, x < y, for which T is minimal. Requires T indecomposable.
std::vector<std::pair<int, int>> minimal_pairs(const Tournament& t);

}  // namespace tdecomp
