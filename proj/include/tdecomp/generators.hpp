#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tdecomp/decomposition.hpp"
#include "tdecomp/tournament.hpp"

namespace tdecomp {

enum class CriticalFamily { T, U, W };

/// T_{2n+1}, U_{2n+1} or W_{2n+1} on 0..2n; size = 2n+1 with n >= 2.
Tournament gen_critical(CriticalFamily family, int size);

/// (0,1), (1,2), (2,0)
Tournament gen_c3();
Tournament gen_total_order(int n);
/// Arcs (i, j) with j - i in {1, 2, 4} mod 7.
Tournament gen_paley7();
/// P7 - 6
Tournament gen_b6();

/// G_2n on 0..2n-1: {x, y} is an edge iff |y - x| >= n. Requires n >= 1.
UndirectedGraph gen_g2n(int n);

/// The explicit 2n+1 vertex member of family H drawn with parameters k, n
/// (k >= 2, n >= k + 1). Blocks around the 3-cycle {0,1,2}:
/// X+(0) = {3..k+1}, X- = {k+2..2k}, X+ = {2k+1..n+k}, X-(1) = {n+k+1..2n}.
Tournament gen_h_figure3(int k, int n);

enum class Family { H, I, J, Jdual, K, Kdual, L, Ldual };

const char* family_name(Family f);
/// Accepts "H", "I", "J", "J*", "Jdual", ... (case-sensitive names).
Family parse_family(const std::string& name);
std::vector<Family> all_families();
bool is_dual_family(Family f);
/// The non-dual family a member is dualised from (identity for H, I, J, K, L).
Family base_family(Family f);

/// Symbolic member of one of the families H, I, J, J*, K, K*, L, L*.
struct FamilySpec {
  Family family = Family::H;
  /// Half-size m >= 1 of each outside component (component i is G_2m).
  std::vector<int> component_sizes;
  /// Optional dominance order for every q-block, listed block by block in
  /// labelling order. Entry b is a permutation of 0..m-1 giving the block's
  /// local indices from the top of the chain down. Empty: increasing labels.
  std::vector<std::vector<int>> chain_orders;

  int vertex_count() const;
  /// "H(1,2)"
  std::string to_string() const;
};

/// One outside component: the two q-blocks (relative to the core {0,1,2}
/// of the non-dual member) with their labels.
struct ComponentLayout {
  int half_size = 0;
  QBlock first_kind;
  VertexSet first;
  QBlock second_kind;
  VertexSet second;
};

/// The component pairs of a family in the order they are labelled.
std::vector<std::pair<QBlock, QBlock>> family_component_blocks(Family f);
/// Labelled layout of a spec: components get the vertices 3, 4, ... block by
/// block. Validates the spec.
std::vector<ComponentLayout> family_layout(const FamilySpec& spec);

struct AssemblyResult {
  /// Every labelled tournament passing the constraints and the final checks.
  std::vector<Tournament> solutions;
  /// Number of distinct isomorphism classes among `solutions`.
  std::size_t classes = 0;
  std::size_t leaves_explored = 0;
};

/// Exhaustive search behind assemble_family (no dualisation, no uniqueness
/// verdict).
AssemblyResult assemble_family_search(const FamilySpec& spec);

/// The C3-critical tournament described by `spec`. Throws InfeasibleSpec when
/// the search finds nothing and AmbiguousSpec when it finds two
/// non-isomorphic tournaments.
Tournament assemble_family(const FamilySpec& spec);

/// Every spec (default chain orders) of the given total vertex count, over
/// all eight families.
std::vector<FamilySpec> family_specs_of_size(int n);

}  // namespace tdecomp
