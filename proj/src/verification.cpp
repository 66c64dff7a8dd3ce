#include "tdecomp/verification.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "tdecomp/decomposition.hpp"
#include "tdecomp/error.hpp"
#include "tdecomp/generators.hpp"
#include "tdecomp/w5.hpp"

namespace tdecomp {

namespace {

// Largest generated family member exercised by the lemma suite.
constexpr int kGeneratedMemberLimit = 13;
// Unfiltered levels up to this size stay cached (6880 classes at 8).
constexpr int kCachedLevelLimit = 8;

// Runs work(i) for i in [0, count) on `jobs` threads. The first exception
// thrown by any worker is rethrown here.
template <typename Work>
void parallel_for(std::size_t count, int jobs, Work&& work) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& thread : threads) thread.join();
  if (failure) std::rethrow_exception(failure);
}

void check_budget(int n, const EnumerationOptions& options) {
  if (n < 1) throw Error(ErrorCode::BadSize, "enumeration needs n >= 1");
  if (n > 64) throw Error(ErrorCode::BadSize, "tournaments are limited to 64 vertices");
  if (n > kEnumerationBudget && !options.force) {
    throw Error(ErrorCode::BudgetExceeded,
                "enumeration above " + std::to_string(kEnumerationBudget) + " vertices needs the force override");
  }
}

// Canonical one-vertex extensions of a canonical parent.
std::vector<Tournament> canonical_children(const Tournament& parent, const TournamentFilter& filter) {
  const int m = parent.size();
  const std::uint64_t last = std::uint64_t{1} << m;
  std::vector<Tournament> kept;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(m) + 1);
  for (std::uint64_t beaten = 0; beaten < last; ++beaten) {
    for (int v = 0; v < m; ++v) out[v] = parent.out_masks()[v] | (((beaten >> v) & 1U) ? 0 : last);
    out[m] = beaten;
    Tournament child = Tournament::from_out_masks(out);
    if (!is_canonical(child)) continue;
    if (filter && !filter(child)) continue;
    kept.push_back(std::move(child));
  }
  return kept;
}

std::vector<Tournament> sorted_by_code(std::vector<Tournament> items) {
  std::vector<std::pair<CanonicalCode, std::size_t>> keys;
  keys.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) keys.emplace_back(labelled_code(items[i]), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Tournament> sorted;
  sorted.reserve(items.size());
  for (const auto& key : keys) sorted.push_back(std::move(items[key.second]));
  return sorted;
}

std::vector<Tournament> extend_level(const std::vector<Tournament>& parents, const TournamentFilter& filter,
                                     int jobs) {
  std::vector<std::vector<Tournament>> shards(parents.size());
  parallel_for(parents.size(), jobs, [&](std::size_t i) { shards[i] = canonical_children(parents[i], filter); });
  std::vector<Tournament> all;
  for (auto& shard : shards) {
    for (auto& t : shard) all.push_back(std::move(t));
  }
  return sorted_by_code(std::move(all));
}

std::mutex g_level_mutex;
std::map<int, std::vector<Tournament>> g_levels;

const std::vector<Tournament>& cached_level(int n, int jobs) {
  {
    std::lock_guard<std::mutex> lock(g_level_mutex);
    auto it = g_levels.find(n);
    if (it != g_levels.end()) return it->second;
  }
  std::vector<Tournament> level;
  if (n == 1) {
    level.push_back(Tournament::total_order(1));
  } else {
    level = extend_level(cached_level(n - 1, jobs), {}, jobs);
  }
  std::lock_guard<std::mutex> lock(g_level_mutex);
  return g_levels.emplace(n, std::move(level)).first->second;
}

std::mutex g_census_mutex;
std::map<int, std::vector<CensusEntry>> g_census;

}  // namespace

std::vector<Tournament> enumerate_tournaments(int n, const TournamentFilter& filter,
                                              const EnumerationOptions& options) {
  check_budget(n, options);
  if (n <= kCachedLevelLimit) {
    const auto& level = cached_level(n, options.jobs);
    if (!filter) return level;
    std::vector<Tournament> kept;
    for (const auto& t : level) {
      if (filter(t)) kept.push_back(t);
    }
    return kept;
  }
  // Intermediate levels above the cache are not kept.
  std::vector<Tournament> parents = cached_level(kCachedLevelLimit, options.jobs);
  for (int m = kCachedLevelLimit + 1; m < n; ++m) parents = extend_level(parents, {}, options.jobs);
  return extend_level(parents, filter, options.jobs);
}

CensusEntry make_census_entry(const Tournament& t) {
  CensusEntry entry;
  const Tournament rep = canonical_tournament(t);
  entry.canonical = labelled_code(rep);
  entry.representative = rep;
  entry.n = rep.size();
  entry.indecomposable = is_indecomposable(rep);
  entry.w5 = w5_vertices(rep);
  entry.w5_size = entry.w5.size();
  entry.omits_w5 = entry.w5.empty();
  if (entry.indecomposable && entry.n >= 3) {
    entry.support = support(rep);
    entry.support_size = entry.support.size();
    entry.family_t_member = entry.w5_size == entry.n - 2;
  }
  return entry;
}

const std::vector<CensusEntry>& census(int n, const EnumerationOptions& options) {
  check_budget(n, options);
  {
    std::lock_guard<std::mutex> lock(g_census_mutex);
    auto it = g_census.find(n);
    if (it != g_census.end()) return it->second;
  }
  const std::vector<Tournament> classes = enumerate_tournaments(n, {}, options);
  std::vector<CensusEntry> entries(classes.size());
  parallel_for(classes.size(), options.jobs, [&](std::size_t i) { entries[i] = make_census_entry(classes[i]); });
  std::lock_guard<std::mutex> lock(g_census_mutex);
  return g_census.emplace(n, std::move(entries)).first->second;
}

void VerdictReport::fail(const Tournament& t, std::string note) {
  passed = false;
  counterexamples.push_back(t);
  counterexample_notes.push_back(std::move(note));
}

void VerdictReport::count(std::string name, long long value) { counts.emplace_back(std::move(name), value); }

VerdictReport check_over_census(const std::string& name, int n_min, int n_max,
                                const std::function<bool(const CensusEntry&)>& applies,
                                const std::function<bool(const Tournament&)>& holds,
                                const EnumerationOptions& options) {
  VerdictReport report;
  report.theorem = name;
  report.n_min = n_min;
  report.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    long long checked = 0;
    for (const auto& entry : census(n, options)) {
      if (applies && !applies(entry)) continue;
      ++checked;
      if (!holds(entry.representative)) report.fail(entry.representative, name);
    }
    report.count("n=" + std::to_string(n) + " checked", checked);
  }
  return report;
}

namespace {

std::vector<Tournament> latka_prediction(int n) {
  if (n == 6) return {gen_b6()};
  if (n == 7) return {gen_paley7(), gen_critical(CriticalFamily::T, 7), gen_critical(CriticalFamily::U, 7)};
  if (n >= 5 && n % 2 == 1) return {gen_critical(CriticalFamily::T, n), gen_critical(CriticalFamily::U, n)};
  return {};
}

// Pairs each class with a note, comparing two sets of canonical codes.
void compare_class_sets(VerdictReport& report, const std::map<CanonicalCode, Tournament>& found,
                        const std::map<CanonicalCode, Tournament>& expected, const std::string& found_label,
                        const std::string& expected_label) {
  for (const auto& [code, t] : found) {
    if (!expected.count(code)) report.fail(t, found_label + " but not " + expected_label);
  }
  for (const auto& [code, t] : expected) {
    if (!found.count(code)) report.fail(t, expected_label + " but not " + found_label);
  }
}

// Position of each core vertex along the 3-cycle core c0 -> c1 -> c2 -> c0,
// starting from the least label.
std::map<int, int> cycle_positions(const Tournament& t, VertexSet core) {
  const int c0 = core.min();
  const int c1 = (t.out(c0) & core).min();
  const int c2 = (core.without(c0).without(c1)).min();
  return {{c0, 0}, {c1, 1}, {c2, 2}};
}

struct CoreBlock {
  QBlock::Kind kind;
  int position;  // -1 for X-, X+
  auto operator<=>(const CoreBlock&) const = default;
};

std::optional<CriticalFamily> connected_configuration(CoreBlock a, CoreBlock b) {
  using K = QBlock::Kind;
  if (b < a) std::swap(a, b);
  auto next = [](int p) { return (p + 1) % 3; };
  auto matches = [&](CoreBlock x, CoreBlock y, auto&& pred) { return pred(x, y) || pred(y, x); };
  const bool t_case = matches(a, b, [&](CoreBlock x, CoreBlock y) {
    return x.kind == K::MinusOf && y.kind == K::PlusOf && y.position == next(x.position);
  });
  if (t_case) return CriticalFamily::T;
  const bool u_case = matches(a, b, [&](CoreBlock x, CoreBlock y) {
    return (x.kind == K::Minus && y.kind == K::PlusOf) || (x.kind == K::Plus && y.kind == K::MinusOf) ||
           (x.kind == K::PlusOf && y.kind == K::PlusOf && y.position == next(x.position)) ||
           (x.kind == K::MinusOf && y.kind == K::MinusOf && y.position == next(x.position));
  });
  if (u_case) return CriticalFamily::U;
  const bool w_case = matches(a, b, [&](CoreBlock x, CoreBlock y) {
    return (x.kind == K::Minus && y.kind == K::MinusOf) || (x.kind == K::Plus && y.kind == K::PlusOf) ||
           (x.kind == K::PlusOf && y.kind == K::MinusOf && y.position == next(x.position));
  });
  if (w_case) return CriticalFamily::W;
  return std::nullopt;
}

// 3-cycle cores X with sigma(T) inside X (T must be indecomposable).
std::vector<VertexSet> c3_critical_cores(const Tournament& t) {
  const VertexSet sigma = support(t);
  std::vector<VertexSet> cores;
  const int n = t.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const VertexSet core{a, b, c};
        if (sigma.subset_of(core) && !is_transitive_on(t, core)) cores.push_back(core);
      }
  return cores;
}

std::vector<VertexSet> u5_critical_cores(const Tournament& t) {
  const VertexSet sigma = support(t);
  const CanonicalCode u5 = canonical_code(gen_critical(CriticalFamily::U, 5));
  std::vector<VertexSet> cores;
  const std::uint64_t all = t.vertices().bits();
  for (std::uint64_t s = all;; s = (s - 1) & all) {
    const VertexSet core(s);
    if (core.size() == 5 && sigma.subset_of(core) &&
        canonical_code(subtournament(t, core).tournament) == u5) {
      cores.push_back(core);
    }
    if (s == 0) break;
  }
  std::sort(cores.begin(), cores.end());
  return cores;
}

void tally_instance(long long* instances) {
  if (instances) ++*instances;
}

bool indecomposable_at_least(const Tournament& t, int n) { return t.size() >= n && is_indecomposable(t); }

// Every edge e of the outside graph of `core` gives T[core u e] isomorphic to
// `target`.
bool all_edges_complete_to(const Tournament& t, VertexSet core, const CanonicalCode& target) {
  const UndirectedGraph g = outside_graph(t, core);
  for (const auto& [x, y] : g.edges()) {
    if (canonical_code(subtournament(t, core | VertexSet{x, y}).tournament) != target) return false;
  }
  return true;
}

}  // namespace

namespace checks {

bool hik_bound_holds(const Tournament& t) {
  const int n = t.size();
  if (!indecomposable_at_least(t, 5)) return true;
  const int w5 = w5_vertices(t).size();
  if (w5 == 0) return true;
  if (w5 < n - 2) return false;
  return n % 2 == 1 || w5 >= n - 1;
}

bool family_t_structure_holds(const Tournament& t) {
  if (!is_family_t_member(t)) return true;
  const VertexSet w5 = w5_vertices(t);
  const VertexSet sigma = support(t);
  return sigma == t.vertices() - w5 && sigma.size() == 2;
}

bool b6_lemma_holds(const Tournament& t, long long* instances) {
  if (t.size() != 7 || !is_indecomposable(t)) return true;
  if (!embeds(gen_b6(), t) || is_isomorphic(t, gen_paley7())) return true;
  tally_instance(instances);
  return w5_vertices(t).size() == 7;
}

bool u5_lemma_holds(const Tournament& t, long long* instances) {
  if (t.size() != 7 || !is_indecomposable(t)) return true;
  if (is_isomorphic(t, gen_critical(CriticalFamily::U, 7))) return true;
  const Tournament u5 = gen_critical(CriticalFamily::U, 5);
  const VertexSet w5 = w5_vertices(t);
  for (VertexSet core : u5_critical_cores(t)) {
    const auto induced = subtournament(t, core);
    // Every isomorphism f from U5 onto T[X]: permute and compare.
    std::vector<int> perm{0, 1, 2, 3, 4};
    do {
      bool iso = true;
      for (int i = 0; i < 5 && iso; ++i)
        for (int j = 0; j < 5 && iso; ++j)
          if (i != j && u5.arc(i, j) != induced.tournament.arc(perm[i], perm[j])) iso = false;
      if (!iso) continue;
      tally_instance(instances);
      const int f3 = induced.labels[perm[3]];
      const int f4 = induced.labels[perm[4]];
      if (!w5.contains(f3) && !w5.contains(f4)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

bool connected_outside_lemma_holds(const Tournament& t, long long* instances) {
  if (!indecomposable_at_least(t, 5)) return true;
  for (VertexSet core : c3_critical_cores(t)) {
    const auto components = connected_components(outside_graph(t, core));
    if (components.size() != 1) continue;
    tally_instance(instances);
    if (!support(t).empty()) return false;
    const SayarReport sayar = check_sayar(t, core);
    if (!sayar.ok || sayar.components.size() != 1) return false;
    const auto& component = sayar.components.front();
    if (!component.q1 || !component.q2) return false;
    const auto positions = cycle_positions(t, core);
    auto as_core_block = [&](QBlock b) {
      return CoreBlock{b.kind, b.anchor < 0 ? -1 : positions.at(b.anchor)};
    };
    const auto family = connected_configuration(as_core_block(*component.q1), as_core_block(*component.q2));
    if (!family || t.size() % 2 == 0) return false;
    if (!is_isomorphic(t, gen_critical(*family, t.size()))) return false;
  }
  return true;
}

bool t_forcing_lemma_holds(const Tournament& t, long long* instances) {
  if (!indecomposable_at_least(t, 5)) return true;
  const CanonicalCode t5 = canonical_code(gen_critical(CriticalFamily::T, 5));
  for (VertexSet core : c3_critical_cores(t)) {
    if (!all_edges_complete_to(t, core, t5)) continue;
    tally_instance(instances);
    if (t.size() % 2 == 0 || !is_isomorphic(t, gen_critical(CriticalFamily::T, t.size()))) return false;
  }
  return true;
}

bool u_forcing_lemma_holds(const Tournament& t, long long* instances) {
  if (!indecomposable_at_least(t, 5)) return true;
  const CanonicalCode u7 = canonical_code(gen_critical(CriticalFamily::U, 7));
  for (VertexSet core : u5_critical_cores(t)) {
    if (!all_edges_complete_to(t, core, u7)) continue;
    tally_instance(instances);
    if (t.size() % 2 == 0 || !is_isomorphic(t, gen_critical(CriticalFamily::U, t.size()))) return false;
  }
  return true;
}

bool edge_deletion_lemma_holds(const Tournament& t, VertexSet core, long long* instances) {
  const SayarReport sayar = check_sayar(t, core);
  if (!sayar.ok) return true;
  for (const auto& component : sayar.components) {
    const int m = component.half_size;
    if (m < 2) continue;
    for (int i = 0; i < m; ++i) {
      const VertexSet e{component.g2n_labels[i], component.g2n_labels[i + m]};
      tally_instance(instances);
      const auto rest = subtournament(t, t.vertices() - e);
      VertexSet relabelled_core;
      for (int k = 0; k < static_cast<int>(rest.labels.size()); ++k) {
        if (core.contains(rest.labels[k])) relabelled_core = relabelled_core.with(k);
      }
      if (!is_indecomposable(rest.tournament) || !is_partially_critical(rest.tournament, relabelled_core)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace checks

VerdictReport verify_latka(int n, const EnumerationOptions& options) {
  if (n < 5) throw Error(ErrorCode::BadSize, "the characterisation starts at 5 vertices");
  VerdictReport report;
  report.theorem = "latka";
  report.n_min = report.n_max = n;
  const auto& entries = census(n, options);
  std::map<CanonicalCode, Tournament> found;
  long long indecomposable = 0;
  for (const auto& entry : entries) {
    if (!entry.indecomposable) continue;
    ++indecomposable;
    if (entry.omits_w5) found.emplace(entry.canonical, entry.representative);
  }
  std::map<CanonicalCode, Tournament> expected;
  for (const auto& t : latka_prediction(n)) expected.emplace(canonical_code(t), canonical_tournament(t));
  compare_class_sets(report, found, expected, "indecomposable omitting W5", "predicted");
  for (const auto& [code, t] : found) report.classes.push_back(code);
  report.count("classes", static_cast<long long>(entries.size()));
  report.count("indecomposable", indecomposable);
  report.count("omitting W5", static_cast<long long>(found.size()));
  report.count("predicted", static_cast<long long>(expected.size()));
  return report;
}

VerdictReport verify_hik(int max_n, const EnumerationOptions& options) {
  if (max_n < 5) throw Error(ErrorCode::BadSize, "the bound is checked from 5 vertices");
  VerdictReport report = check_over_census(
      "hik", 5, max_n, [](const CensusEntry& e) { return e.indecomposable && !e.omits_w5; },
      checks::hik_bound_holds, options);
  return report;
}

VerdictReport verify_main(int n, const EnumerationOptions& options) {
  if (n < 5) throw Error(ErrorCode::BadSize, "family T members have at least 7 vertices");
  VerdictReport report;
  report.theorem = "main";
  report.n_min = report.n_max = n;

  std::map<CanonicalCode, Tournament> enumerated;
  for (const auto& entry : census(n, options)) {
    if (!entry.family_t_member) continue;
    enumerated.emplace(entry.canonical, entry.representative);
    if (!checks::family_t_structure_holds(entry.representative)) {
      report.fail(entry.representative, "family-T member with V \\ W5 != sigma or |sigma| != 2");
    }
  }

  const std::vector<FamilySpec> specs = family_specs_of_size(n);
  std::vector<Tournament> members(specs.size());
  parallel_for(specs.size(), options.jobs, [&](std::size_t i) { members[i] = assemble_family(specs[i]); });
  std::map<CanonicalCode, Tournament> generated;
  const VertexSet pair{0, 1};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Tournament& t = members[i];
    generated.emplace(canonical_code(t), canonical_tournament(t));
    if (!is_indecomposable(t) || t.vertices() - w5_vertices(t) != pair || support(t) != pair) {
      report.fail(t, specs[i].to_string() + ": V \\ W5 and sigma are not both {0,1}");
    }
  }
  compare_class_sets(report, enumerated, generated, "enumerated family-T", "generated");
  for (const auto& [code, t] : enumerated) report.classes.push_back(code);
  report.count("family-T classes", static_cast<long long>(enumerated.size()));
  report.count("specs", static_cast<long long>(specs.size()));
  report.count("generated classes", static_cast<long long>(generated.size()));
  return report;
}

VerdictReport verify_lemma_suite(int budget_n, const EnumerationOptions& options) {
  if (budget_n < 5) throw Error(ErrorCode::BadSize, "the lemma suite needs a budget of at least 5 vertices");
  check_budget(budget_n, options);
  VerdictReport report;
  report.theorem = "lemmas";
  report.n_min = 3;
  report.n_max = budget_n;

  auto run = [&](const std::string& name, int n_min, int n_max, auto&& applies, auto&& holds) {
    if (n_min > n_max) return;
    long long instances = 0;
    const VerdictReport part = check_over_census(
        name, n_min, n_max, applies, [&](const Tournament& t) { return holds(t, &instances); }, options);
    long long checked = 0;
    for (const auto& [key, value] : part.counts) checked += value;
    report.count(name + " checked", checked);
    report.count(name + " instances", instances);
    for (std::size_t i = 0; i < part.counterexamples.size(); ++i) {
      report.fail(part.counterexamples[i], part.counterexample_notes[i]);
    }
  };
  auto indecomposable = [](const CensusEntry& e) { return e.indecomposable; };
  const int seven = std::min(budget_n, 7);

  run("b6 lemma", 7, seven, indecomposable, checks::b6_lemma_holds);
  run("u5 lemma", 7, seven, indecomposable, checks::u5_lemma_holds);
  run("connected outside graph", 5, budget_n, indecomposable, checks::connected_outside_lemma_holds);
  run("t forcing", 5, budget_n, indecomposable, checks::t_forcing_lemma_holds);
  run("u forcing", 5, budget_n, indecomposable, checks::u_forcing_lemma_holds);
  run("family-T structure", 5, budget_n, [](const CensusEntry& e) { return e.family_t_member; },
      [](const Tournament& t, long long* instances) {
        tally_instance(instances);
        return checks::family_t_structure_holds(t);
      });

  // Minimal-for-pair classes with |W5| <= n - 2.
  {
    std::map<CanonicalCode, Tournament> found;
    long long checked = 0;
    for (int n = 3; n <= budget_n; ++n) {
      for (const auto& entry : census(n, options)) {
        if (!entry.indecomposable || entry.w5_size > n - 2) continue;
        ++checked;
        if (!minimal_pairs(entry.representative).empty()) found.emplace(entry.canonical, entry.representative);
      }
    }
    std::map<CanonicalCode, Tournament> expected;
    for (const auto& t : {gen_c3(), gen_critical(CriticalFamily::U, 5)}) {
      expected.emplace(canonical_code(t), canonical_tournament(t));
    }
    compare_class_sets(report, found, expected, "minimal for a pair", "C3 or U5");
    const Tournament u5 = gen_critical(CriticalFamily::U, 5);
    if (minimal_pairs(u5) != std::vector<std::pair<int, int>>{{3, 4}}) {
      report.fail(u5, "U5 is minimal for a pair other than {3,4}");
    }
    report.count("minimality checked", checked);
  }

  // Generated members: edge deletion, duality closure and c(T).
  long long members_checked = 0;
  long long deletions = 0;
  for (int n = 7; n <= kGeneratedMemberLimit; n += 2) {
    const std::vector<FamilySpec> specs = family_specs_of_size(n);
    std::vector<Tournament> members(specs.size());
    parallel_for(specs.size(), options.jobs, [&](std::size_t i) { members[i] = assemble_family(specs[i]); });
    std::map<Family, std::set<CanonicalCode>> by_family;
    for (std::size_t i = 0; i < specs.size(); ++i) by_family[specs[i].family].insert(canonical_code(members[i]));
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const Tournament& t = members[i];
      const std::string name = specs[i].to_string();
      ++members_checked;
      if (!checks::edge_deletion_lemma_holds(t, VertexSet{0, 1, 2}, &deletions)) report.fail(t, name + ": edge deletion");
      const Family f = specs[i].family;
      if ((f == Family::H || f == Family::I) && !by_family[f].count(canonical_code(dual(t)))) {
        report.fail(t, name + ": dual is not a member of the same family");
      }
      const int expected_c = base_family(f) == Family::L ? 3 : 2;
      const int c = c_invariant(t);
      if (c != expected_c || c != c_invariant(dual(t))) report.fail(t, name + ": c(T) = " + std::to_string(c));
    }
  }
  report.count("generated members checked", members_checked);
  report.count("edge deletions checked", deletions);

  run("c(T) range", 7, budget_n, [](const CensusEntry& e) { return e.family_t_member; },
      [](const Tournament& t, long long* instances) {
        tally_instance(instances);
        const int c = c_invariant(t);
        return c == 2 || c == 3;
      });
  return report;
}

}  // namespace tdecomp
