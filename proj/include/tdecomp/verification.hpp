#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tdecomp/canonical.hpp"
#include "tdecomp/tournament.hpp"

namespace tdecomp {

/// Largest vertex count enumerated without an explicit override.
constexpr int kEnumerationBudget = 9;

struct EnumerationOptions {
  /// Worker threads; results do not depend on it.
  int jobs = 1;
  /// Allow n above kEnumerationBudget.
  bool force = false;
};

using TournamentFilter = std::function<bool(const Tournament&)>;

/// One canonical representative per isomorphism class of n-vertex
/// tournaments accepted by `filter`, sorted by canonical code.
///
/// Orderly generation: every canonical (n-1)-vertex representative is
/// extended by a new last vertex in all 2^(n-1) ways and an extension is kept
/// iff it is itself in canonical labelling. Parents are sharded over the
/// workers and the survivors merged by canonical code.
std::vector<Tournament> enumerate_tournaments(int n, const TournamentFilter& filter = {},
                                              const EnumerationOptions& options = {});

/// Properties of one isomorphism class.
struct CensusEntry {
  CanonicalCode canonical;
  Tournament representative;
  int n = 0;
  bool indecomposable = false;
  bool omits_w5 = true;
  bool family_t_member = false;
  /// -1 unless indecomposable with n >= 3.
  int support_size = -1;
  int w5_size = 0;
  VertexSet support;
  VertexSet w5;
};

CensusEntry make_census_entry(const Tournament& t);

/// The census of all n-vertex classes, computed once per process and cached.
const std::vector<CensusEntry>& census(int n, const EnumerationOptions& options = {});

struct VerdictReport {
  std::string theorem;
  int n_min = 0;
  int n_max = 0;
  bool passed = true;
  /// Failing tournaments, each with a note saying which check it breaks.
  std::vector<Tournament> counterexamples;
  std::vector<std::string> counterexample_notes;
  /// Census numbers backing the verdict, in insertion order.
  std::vector<std::pair<std::string, long long>> counts;
  /// Canonical codes of the classes a verdict is about (e.g. the classes
  /// found by a characterisation check), sorted.
  std::vector<CanonicalCode> classes;

  void fail(const Tournament& t, std::string note);
  void count(std::string name, long long value);
};

/// Runs `holds` on every class of the census for n in [n_min, n_max] that
/// passes `applies`, failing the report with each class where it does not.
VerdictReport check_over_census(const std::string& name, int n_min, int n_max,
                                const std::function<bool(const CensusEntry&)>& applies,
                                const std::function<bool(const Tournament&)>& holds,
                                const EnumerationOptions& options = {});

/// Indecomposable classes omitting W5 on n vertices are exactly the
/// predicted B6, P7, T and U tournaments.
VerdictReport verify_latka(int n, const EnumerationOptions& options = {});
/// |W5(T)| >= |T| - 2 (and >= |T| - 1 for even |T|) for indecomposable T
/// into which W5 embeds, 5 <= |T| <= max_n.
VerdictReport verify_hik(int max_n, const EnumerationOptions& options = {});
/// Family-T classes on n vertices coincide with the generated members of
/// the eight families, and generated members have V \ W5 = sigma = {0,1}.
VerdictReport verify_main(int n, const EnumerationOptions& options = {});
/// The configuration lemmas, the minimal-for-a-pair classes, duality and the
/// c(T) values, each over its hypothesis space within the budget.
VerdictReport verify_lemma_suite(int budget_n, const EnumerationOptions& options = {});

/// Per-tournament checks used by the verdicts; a counterexample replays by
/// calling the matching check on it. `instances`, when given, is increased by
/// the number of hypothesis instances met in t.
namespace checks {

bool hik_bound_holds(const Tournament& t);
/// Every x in W5(T) is critical and V \ W5(T) = sigma(T) (family-T input).
bool family_t_structure_holds(const Tournament& t);
/// B6 embeds, T not P7, 7 vertices => |W5(T)| = 7.
bool b6_lemma_holds(const Tournament& t, long long* instances = nullptr);
/// U5-critical 7-vertex T not isomorphic to U7 meets {3,4} of every U5 core
/// copy with W5(T).
bool u5_lemma_holds(const Tournament& t, long long* instances = nullptr);
/// C3-critical T with a connected outside graph is critical and matches the
/// listed T/U/W configuration.
bool connected_outside_lemma_holds(const Tournament& t, long long* instances = nullptr);
/// C3-critical T whose edges all complete the core to T5 is a T tournament.
bool t_forcing_lemma_holds(const Tournament& t, long long* instances = nullptr);
/// U5-critical T whose edges all complete the core to U7 is a U tournament.
bool u_forcing_lemma_holds(const Tournament& t, long long* instances = nullptr);
/// Deleting a matched pair {i, i+m} of a G_2m component (m >= 2) of the
/// outside graph of `core` keeps T[core]-criticality.
bool edge_deletion_lemma_holds(const Tournament& t, VertexSet core, long long* instances = nullptr);

}  // namespace checks

}  // namespace tdecomp
