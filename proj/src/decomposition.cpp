#include "tdecomp/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tdecomp {

namespace {

// z outside I splits I when it beats some but not all of I.
bool splits(const Tournament& t, int z, VertexSet interval) {
  const VertexSet beaten = t.out(z) & interval;
  return !beaten.empty() && beaten != interval;
}

void check_core(const Tournament& t, VertexSet core) {
  check_subset(t, core);
  if (core.size() < 3) {
    throw Error(ErrorCode::CoreTooSmall, "core " + core.to_string() + " has fewer than 3 vertices");
  }
  if (!is_indecomposable_on(t, core)) {
    throw Error(ErrorCode::CoreNotIndecomposable, "T[" + core.to_string() + "] is decomposable");
  }
}

}  // namespace

bool is_interval(const Tournament& t, VertexSet interval) {
  check_subset(t, interval);
  for (int z : t.vertices() - interval) {
    if (splits(t, z, interval)) return false;
  }
  return true;
}

VertexSet interval_closure(const Tournament& t, VertexSet s, VertexSet seed) {
  VertexSet closure = seed;
  for (;;) {
    VertexSet grow;
    for (int z : s - closure) {
      if (splits(t, z, closure)) grow = grow.with(z);
    }
    if (grow.empty()) return closure;
    closure |= grow;
  }
}

bool is_indecomposable_on(const Tournament& t, VertexSet s) {
  if (s.size() <= 2) return true;
  // A source or sink of T[S] leaves the rest as a nontrivial interval.
  for (int v : s) {
    const int score = (t.out(v) & s).size();
    if (score == 0 || score == s.size() - 1) return false;
  }
  for (int a : s) {
    for (int b : s) {
      if (b <= a) continue;
      if (interval_closure(t, s, VertexSet{a, b}) != s) return false;
    }
  }
  return true;
}

bool is_indecomposable(const Tournament& t) { return is_indecomposable_on(t, t.vertices()); }

std::vector<VertexSet> nontrivial_intervals(const Tournament& t) {
  // Every interval with at least two vertices is reached from the closure of
  // one of its pairs by repeatedly adding a vertex and closing again.
  const VertexSet all = t.vertices();
  std::set<VertexSet> found;
  std::vector<VertexSet> queue;
  auto visit = [&](VertexSet interval) {
    if (interval == all) return;
    if (found.insert(interval).second) queue.push_back(interval);
  };
  for (int a : all) {
    for (int b : all) {
      if (a < b) visit(interval_closure(t, all, VertexSet{a, b}));
    }
  }
  while (!queue.empty()) {
    const VertexSet interval = queue.back();
    queue.pop_back();
    for (int c : all - interval) visit(interval_closure(t, all, interval.with(c)));
  }
  return {found.begin(), found.end()};
}

VertexSet support(const Tournament& t) {
  if (t.size() < 3) {
    throw Error(ErrorCode::NotIndecomposable, "support needs an indecomposable tournament on at least 3 vertices");
  }
  if (!is_indecomposable(t)) throw Error(ErrorCode::NotIndecomposable, "tournament is decomposable");
  VertexSet result;
  for (int x : t.vertices()) {
    if (is_indecomposable_on(t, t.vertices().without(x))) result = result.with(x);
  }
  return result;
}

std::string QBlock::name() const {
  switch (kind) {
    case Kind::Ext: return "Ext";
    case Kind::Minus: return "X-";
    case Kind::Plus: return "X+";
    case Kind::MinusOf: return "X-(" + std::to_string(anchor) + ")";
    case Kind::PlusOf: return "X+(" + std::to_string(anchor) + ")";
  }
  return "?";
}

VertexSet OutsidePartition::of(int u) const {
  VertexSet r;
  if (auto it = per_u_minus.find(u); it != per_u_minus.end()) r |= it->second;
  if (auto it = per_u_plus.find(u); it != per_u_plus.end()) r |= it->second;
  return r;
}

VertexSet OutsidePartition::block(QBlock b) const {
  switch (b.kind) {
    case QBlock::Kind::Ext: return ext;
    case QBlock::Kind::Minus: return x_minus;
    case QBlock::Kind::Plus: return x_plus;
    case QBlock::Kind::MinusOf: {
      auto it = per_u_minus.find(b.anchor);
      return it == per_u_minus.end() ? VertexSet{} : it->second;
    }
    case QBlock::Kind::PlusOf: {
      auto it = per_u_plus.find(b.anchor);
      return it == per_u_plus.end() ? VertexSet{} : it->second;
    }
  }
  return {};
}

QBlock OutsidePartition::block_of(int x) const {
  if (ext.contains(x)) return QBlock::ext();
  if (x_minus.contains(x)) return QBlock::minus();
  if (x_plus.contains(x)) return QBlock::plus();
  for (const auto& [u, members] : per_u_minus) {
    if (members.contains(x)) return QBlock::minus_of(u);
  }
  for (const auto& [u, members] : per_u_plus) {
    if (members.contains(x)) return QBlock::plus_of(u);
  }
  throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x) + " is not outside the core");
}

std::vector<std::pair<QBlock, VertexSet>> OutsidePartition::nonempty_blocks() const {
  std::vector<std::pair<QBlock, VertexSet>> blocks;
  auto add = [&](QBlock b, VertexSet members) {
    if (!members.empty()) blocks.emplace_back(b, members);
  };
  add(QBlock::ext(), ext);
  add(QBlock::minus(), x_minus);
  add(QBlock::plus(), x_plus);
  for (const auto& [u, members] : per_u_minus) add(QBlock::minus_of(u), members);
  for (const auto& [u, members] : per_u_plus) add(QBlock::plus_of(u), members);
  return blocks;
}

OutsidePartition outside_partition(const Tournament& t, VertexSet core) {
  check_core(t, core);
  OutsidePartition p;
  p.core = core;
  for (int u : core) {
    p.per_u_minus[u] = {};
    p.per_u_plus[u] = {};
  }
  for (int x : t.vertices() - core) {
    const VertexSet beaten = t.out(x) & core;
    if (beaten == core) {
      p.x_minus = p.x_minus.with(x);
      continue;
    }
    if (beaten.empty()) {
      p.x_plus = p.x_plus.with(x);
      continue;
    }
    if (is_indecomposable_on(t, core.with(x))) {
      p.ext = p.ext.with(x);
      continue;
    }
    int anchor = -1;
    for (int u : core) {
      bool twin = true;
      for (int z : core.without(u)) {
        if (t.arc(z, u) != t.arc(z, x)) {
          twin = false;
          break;
        }
      }
      if (twin) {
        anchor = u;
        break;
      }
    }
    if (anchor < 0) {
      // Impossible for an indecomposable core: the blocks partition V \ X.
      throw std::logic_error("outside vertex " + std::to_string(x) + " fits no block");
    }
    if (t.arc(x, anchor)) {
      p.per_u_minus[anchor] = p.per_u_minus[anchor].with(x);
    } else {
      p.per_u_plus[anchor] = p.per_u_plus[anchor].with(x);
    }
  }
  return p;
}

UndirectedGraph outside_graph(const Tournament& t, VertexSet core) {
  check_core(t, core);
  const VertexSet outside = t.vertices() - core;
  std::vector<std::pair<int, int>> edges;
  for (int x : outside) {
    for (int y : outside) {
      if (x < y && is_indecomposable_on(t, core.with(x).with(y))) edges.emplace_back(x, y);
    }
  }
  return UndirectedGraph(outside, edges);
}

bool is_partially_critical(const Tournament& t, VertexSet core) {
  check_subset(t, core);
  if (core.size() < 3) {
    throw Error(ErrorCode::CoreTooSmall, "core " + core.to_string() + " has fewer than 3 vertices");
  }
  const VertexSet sigma = support(t);
  return is_indecomposable_on(t, core) && sigma.subset_of(core);
}

namespace {

// Try to read G[Q] as G_2n with f(N_n) = side1 and f(N_2n \ N_n) = side2.
// Degrees are distinct on each side, so the only candidate places the
// vertex of degree n - i at position i of side 1 and the vertex of degree
// j + 1 at position n + j of side 2.
bool match_g2n(const UndirectedGraph& g, VertexSet side1, VertexSet side2, std::vector<int>& labels) {
  const int n = side1.size();
  if (side2.size() != n || n == 0) return false;
  labels.assign(static_cast<std::size_t>(2 * n), -1);
  for (int x : side1) {
    if (g.neighbors(x).intersects(side1)) return false;
    const int d = g.degree(x);
    if (d < 1 || d > n || labels[n - d] != -1) return false;
    labels[n - d] = x;
  }
  for (int y : side2) {
    if (g.neighbors(y).intersects(side2)) return false;
    const int d = g.degree(y);
    if (d < 1 || d > n || labels[n + d - 1] != -1) return false;
    labels[n + d - 1] = y;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = n; j < 2 * n; ++j) {
      if (g.has_edge(labels[i], labels[j]) != (j - i >= n)) return false;
    }
  }
  return true;
}

bool degree_formula_holds(const Tournament& t, const UndirectedGraph& g, QBlock kind, VertexSet half, int n) {
  for (int x : half) {
    const int score = (t.out(x) & half).size();
    int expected = 0;
    switch (kind.kind) {
      case QBlock::Kind::Plus:
      case QBlock::Kind::MinusOf: expected = score + 1; break;
      case QBlock::Kind::Minus:
      case QBlock::Kind::PlusOf: expected = n - score; break;
      case QBlock::Kind::Ext: return false;
    }
    if (g.degree(x) != expected) return false;
  }
  return true;
}

}  // namespace

SayarReport check_sayar(const Tournament& t, VertexSet core) {
  const OutsidePartition p = outside_partition(t, core);
  const UndirectedGraph g = outside_graph(t, core);

  SayarReport report;
  report.ext_empty = p.ext.empty();
  report.transitivity_ok = true;
  for (int u : core) {
    if (!is_transitive_on(t, p.of(u).with(u)) || !is_transitive_on(t, p.uniform().with(u))) {
      report.transitivity_ok = false;
      break;
    }
  }

  const auto blocks = p.nonempty_blocks();
  bool components_ok = true;
  for (VertexSet component : connected_components(g)) {
    ComponentReport c;
    c.component = component;
    std::vector<std::pair<QBlock, VertexSet>> touching;
    bool whole = true;
    for (const auto& [b, members] : blocks) {
      if (!members.intersects(component)) continue;
      touching.emplace_back(b, members);
      if (!members.subset_of(component)) whole = false;
    }
    if (whole && touching.size() == 2) {
      c.half_size = component.size() / 2;
      // Either block may play the first half of G_2n; accept any assignment
      // that satisfies both the isomorphism and the degree formula.
      for (int swap = 0; swap < 2 && !c.ok(); ++swap) {
        const auto& first = touching[swap];
        const auto& second = touching[1 - swap];
        std::vector<int> labels;
        if (!match_g2n(g, first.second, second.second, labels)) continue;
        c.g2n_ok = true;
        c.q1 = first.first;
        c.q2 = second.first;
        c.g2n_labels = labels;
        c.degree_formula_ok = degree_formula_holds(t, g, first.first, first.second, c.half_size) &&
                              degree_formula_holds(t, g, second.first, second.second, c.half_size);
      }
    }
    components_ok = components_ok && c.ok();
    report.components.push_back(std::move(c));
  }
  report.ok = report.ext_empty && report.transitivity_ok && components_ok;
  return report;
}

std::pair<int, int> transitive_min_max_on(const Tournament& t, VertexSet s) {
  check_subset(t, s);
  if (s.empty()) throw Error(ErrorCode::BadSize, "empty tournament has no min or max");
  if (!is_transitive_on(t, s)) throw Error(ErrorCode::NotTransitive, "tournament contains a 3-cycle");
  int lo = -1;
  int hi = -1;
  for (int v : s) {
    const int score = (t.out(v) & s).size();
    if (score == s.size() - 1) lo = v;
    if (score == 0) hi = v;
  }
  return {lo, hi};
}

std::pair<int, int> transitive_min_max(const Tournament& t) { return transitive_min_max_on(t, t.vertices()); }

}  // namespace tdecomp
