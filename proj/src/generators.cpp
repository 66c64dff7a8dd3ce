#include "tdecomp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tdecomp/canonical.hpp"

namespace tdecomp {

Tournament gen_critical(CriticalFamily family, int size) {
  if (size < 5 || size % 2 == 0 || size > Tournament::kMaxVertices) {
    throw Error(ErrorCode::BadSize, "critical tournaments need an odd size >= 5, got " + std::to_string(size));
  }
  const int n = (size - 1) / 2;
  switch (family) {
    case CriticalFamily::T:
      return Tournament::from_predicate(size, [&](int i, int j) { return (j - i) <= n; });
    case CriticalFamily::U:
      // T_{2n+1} with the arcs inside {n+1..2n} reversed.
      return Tournament::from_predicate(size, [&](int i, int j) {
        const bool t_arc = (j - i) <= n;
        return (i > n && j > n) ? !t_arc : t_arc;
      });
    case CriticalFamily::W:
      // Total order on 0..2n-1; 2n beats exactly the even vertices.
      return Tournament::from_predicate(size, [&](int i, int j) {
        if (j < 2 * n) return true;
        return i % 2 == 1;
      });
  }
  throw Error(ErrorCode::BadParameters, "unknown critical family");
}

Tournament gen_c3() { return make_tournament(3, {{0, 1}, {1, 2}, {2, 0}}); }

Tournament gen_total_order(int n) { return Tournament::total_order(n); }

Tournament gen_paley7() {
  return Tournament::from_predicate(7, [](int i, int j) {
    const int d = (j - i) % 7;
    return d == 1 || d == 2 || d == 4;
  });
}

Tournament gen_b6() { return subtournament(gen_paley7(), VertexSet::range(6)).tournament; }

UndirectedGraph gen_g2n(int n) {
  if (n < 1 || 2 * n > 64) throw Error(ErrorCode::BadSize, "G_2n needs 1 <= n <= 32, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = x + n; y < 2 * n; ++y) edges.emplace_back(x, y);
  }
  return UndirectedGraph(VertexSet::range(2 * n), edges);
}

Tournament gen_h_figure3(int k, int n) {
  if (k < 2 || n < k + 1 || 2 * n + 1 > Tournament::kMaxVertices) {
    throw Error(ErrorCode::BadParameters,
                "figure parameters need k >= 2 and n >= k + 1, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  enum Part { Core, PlusOf0, Minus, Plus, MinusOf1 };
  auto part = [&](int v) {
    if (v < 3) return Core;
    if (v <= k + 1) return PlusOf0;
    if (v <= 2 * k) return Minus;
    if (v <= n + k) return Plus;
    return MinusOf1;
  };
  const Tournament c3 = gen_c3();
  // Relation of an outside vertex to a core vertex u, from its block.
  auto beats_core = [&](int x, int u) {
    switch (part(x)) {
      case Minus: return true;
      case Plus: return false;
      case PlusOf0: return u == 0 ? false : c3.arc(0, u);
      case MinusOf1: return u == 1 ? true : c3.arc(1, u);
      case Core: break;
    }
    return false;
  };
  auto beats = [&](int i, int j) -> bool {  // i < j
    const Part pi = part(i);
    const Part pj = part(j);
    if (pi == Core && pj == Core) return c3.arc(i, j);
    if (pi == Core) return !beats_core(j, i);
    if (pi == pj) {
      // X- and X+ are increasing chains, X+(0) and X-(1) decreasing ones.
      return pi == Minus || pi == Plus;
    }
    if (pi == PlusOf0 && pj == Minus) return j - i >= k - 1;
    if (pi == Plus && pj == MinusOf1) return j - i >= n - k;
    // Across components: a vertex of X(u) relates to the other side as u does.
    if (pi == PlusOf0) return !beats_core(j, 0);
    if (pj == MinusOf1) return beats_core(i, 1);
    // X- against X+
    return true;
  };
  return Tournament::from_predicate(2 * n + 1, beats);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::I: return "I";
    case Family::J: return "J";
    case Family::Jdual: return "J*";
    case Family::K: return "K";
    case Family::Kdual: return "K*";
    case Family::L: return "L";
    case Family::Ldual: return "L*";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : all_families()) {
    if (name == family_name(f)) return f;
  }
  if (name == "Jdual") return Family::Jdual;
  if (name == "Kdual") return Family::Kdual;
  if (name == "Ldual") return Family::Ldual;
  throw Error(ErrorCode::BadParameters, "unknown family '" + name + "'");
}

std::vector<Family> all_families() {
  return {Family::H, Family::I, Family::J, Family::Jdual, Family::K, Family::Kdual, Family::L, Family::Ldual};
}

bool is_dual_family(Family f) { return f == Family::Jdual || f == Family::Kdual || f == Family::Ldual; }

Family base_family(Family f) {
  switch (f) {
    case Family::Jdual: return Family::J;
    case Family::Kdual: return Family::K;
    case Family::Ldual: return Family::L;
    default: return f;
  }
}

int FamilySpec::vertex_count() const {
  return 3 + 2 * std::accumulate(component_sizes.begin(), component_sizes.end(), 0);
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << family_name(family) << '(';
  for (std::size_t i = 0; i < component_sizes.size(); ++i) os << (i ? "," : "") << component_sizes[i];
  os << ')';
  return os.str();
}

std::vector<std::pair<QBlock, QBlock>> family_component_blocks(Family f) {
  using B = QBlock;
  switch (base_family(f)) {
    case Family::H: return {{B::plus_of(0), B::minus()}, {B::plus(), B::minus_of(1)}};
    case Family::I: return {{B::plus_of(0), B::plus_of(2)}, {B::plus_of(1), B::minus_of(0)}};
    case Family::J: return {{B::plus_of(1), B::minus()}, {B::minus_of(1), B::minus_of(0)}};
    case Family::K: return {{B::plus_of(1), B::minus()}, {B::plus_of(0), B::minus_of(2)}};
    case Family::L:
      return {{B::plus_of(1), B::minus()}, {B::plus_of(0), B::minus_of(2)}, {B::plus(), B::minus_of(0)}};
    default: break;
  }
  throw Error(ErrorCode::BadParameters, "unknown family");
}

std::vector<ComponentLayout> family_layout(const FamilySpec& spec) {
  const auto pairs = family_component_blocks(spec.family);
  if (spec.component_sizes.size() != pairs.size()) {
    throw Error(ErrorCode::BadParameters, std::string("family ") + family_name(spec.family) + " needs " +
                                              std::to_string(pairs.size()) + " component sizes");
  }
  for (int m : spec.component_sizes) {
    if (m < 1) throw Error(ErrorCode::BadParameters, "component half-sizes must be >= 1");
  }
  if (spec.vertex_count() > Tournament::kMaxVertices) {
    throw Error(ErrorCode::BadParameters, "spec exceeds 64 vertices");
  }
  std::vector<ComponentLayout> layout;
  int next = 3;
  auto take = [&](int m) {
    const VertexSet block(VertexSet::range(next + m).bits() & ~VertexSet::range(next).bits());
    next += m;
    return block;
  };
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    ComponentLayout comp;
    comp.half_size = spec.component_sizes[c];
    comp.first_kind = pairs[c].first;
    comp.first = take(comp.half_size);
    comp.second_kind = pairs[c].second;
    comp.second = take(comp.half_size);
    layout.push_back(comp);
  }
  if (!spec.chain_orders.empty()) {
    if (spec.chain_orders.size() != 2 * pairs.size()) {
      throw Error(ErrorCode::BadParameters, "chain orders must list one order per q-block");
    }
    for (std::size_t b = 0; b < spec.chain_orders.size(); ++b) {
      std::vector<int> sorted = spec.chain_orders[b];
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> expected(static_cast<std::size_t>(spec.component_sizes[b / 2]));
      std::iota(expected.begin(), expected.end(), 0);
      if (sorted != expected) {
        throw Error(ErrorCode::BadParameters, "chain order " + std::to_string(b) + " is not a permutation of its block");
      }
    }
  }
  return layout;
}

namespace {

struct BlockPlan {
  QBlock kind;
  VertexSet members;
  std::vector<int> chain;  // top of the chain first
  int component = 0;
  int half_size = 0;
};

// Relation of a vertex of block `kind` to core vertex u (core arcs of C3).
bool block_beats_core(const Tournament& core, QBlock kind, int u) {
  switch (kind.kind) {
    case QBlock::Kind::Minus: return true;
    case QBlock::Kind::Plus: return false;
    case QBlock::Kind::MinusOf: return u == kind.anchor ? true : core.arc(kind.anchor, u);
    case QBlock::Kind::PlusOf: return u == kind.anchor ? false : core.arc(kind.anchor, u);
    case QBlock::Kind::Ext: break;
  }
  throw Error(ErrorCode::InfeasibleSpec, "families have no Ext block");
}

bool in_uniform(QBlock b) { return b.kind == QBlock::Kind::Minus || b.kind == QBlock::Kind::Plus; }

class Assembler {
 public:
  explicit Assembler(const FamilySpec& spec) {
    const auto layout = family_layout(spec);
    const FamilySpec base{base_family(spec.family), spec.component_sizes, spec.chain_orders};
    n_ = base.vertex_count();
    core_ = VertexSet{0, 1, 2};
    const Tournament c3 = gen_c3();

    std::size_t b = 0;
    for (std::size_t c = 0; c < layout.size(); ++c) {
      for (int side = 0; side < 2; ++side, ++b) {
        BlockPlan plan;
        plan.kind = side == 0 ? layout[c].first_kind : layout[c].second_kind;
        plan.members = side == 0 ? layout[c].first : layout[c].second;
        plan.component = static_cast<int>(c);
        plan.half_size = layout[c].half_size;
        const std::vector<int> labels = plan.members.to_vector();
        if (spec.chain_orders.empty()) {
          plan.chain = labels;
        } else {
          for (int local : spec.chain_orders[b]) plan.chain.push_back(labels[local]);
        }
        blocks_.push_back(plan);
      }
    }
    block_of_.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (int v : blocks_[i].members) block_of_[v] = static_cast<int>(i);
    }

    // Forced arcs: the core, block-to-core relations, chains inside blocks.
    out_.assign(static_cast<std::size_t>(n_), 0);
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        if (x != y && c3.arc(x, y)) set_arc(x, y);
      }
    }
    target_degree_.assign(static_cast<std::size_t>(n_), 0);
    for (const BlockPlan& plan : blocks_) {
      for (int x : plan.members) {
        for (int u = 0; u < 3; ++u) {
          if (block_beats_core(c3, plan.kind, u)) {
            set_arc(x, u);
          } else {
            set_arc(u, x);
          }
        }
      }
      const int m = plan.half_size;
      for (int r = 0; r < m; ++r) {
        for (int s = r + 1; s < m; ++s) set_arc(plan.chain[r], plan.chain[s]);
        // Degree in G_2m prescribed by the block's kind and chain score.
        const int score = m - 1 - r;
        const bool up = plan.kind.kind == QBlock::Kind::Plus || plan.kind.kind == QBlock::Kind::MinusOf;
        target_degree_[plan.chain[r]] = up ? score + 1 : m - score;
      }
    }
    // Arcs between distinct blocks are the search variables.
    for (int x = 3; x < n_; ++x) {
      for (int y = x + 1; y < n_; ++y) {
        if (block_of_[x] != block_of_[y]) {
          set_arc(x, y);
          pairs_.emplace_back(x, y);
        }
      }
    }
  }

  AssemblyResult run() {
    std::vector<std::vector<bool>> domains;
    for (auto [x, y] : pairs_) {
      std::vector<bool> domain;
      for (bool x_beats_y : {true, false}) {
        if (allowed(x, y, x_beats_y)) domain.push_back(x_beats_y);
      }
      if (domain.empty()) {
        throw Error(ErrorCode::InfeasibleSpec,
                    "no orientation of {" + std::to_string(x) + "," + std::to_string(y) + "} fits the spec");
      }
      domains.push_back(std::move(domain));
    }
    double leaves = 1;
    for (const auto& d : domains) leaves *= static_cast<double>(d.size());
    if (leaves > kLeafLimit) {
      throw Error(ErrorCode::InfeasibleSpec, "assembly search space exceeds the leaf limit");
    }
    AssemblyResult result;
    std::set<CanonicalCode> codes;
    descend(0, domains, result, codes);
    result.classes = codes.size();
    return result;
  }

 private:
  static constexpr double kLeafLimit = 1 << 16;

  void set_arc(int x, int y) {
    out_[x] |= std::uint64_t{1} << y;
    out_[y] &= ~(std::uint64_t{1} << x);
  }

  bool target_edge(int x, int y) const {
    const BlockPlan& bx = blocks_[block_of_[x]];
    const BlockPlan& by = blocks_[block_of_[y]];
    if (bx.component != by.component || block_of_[x] == block_of_[y]) return false;
    return target_degree_[x] + target_degree_[y] >= bx.half_size + 1;
  }

  bool allowed(int x, int y, bool x_beats_y) {
    if (x_beats_y) {
      set_arc(x, y);
    } else {
      set_arc(y, x);
    }
    const Tournament t = Tournament::from_out_masks(out_);
    const VertexSet five = core_.with(x).with(y);
    const bool indecomposable = is_indecomposable_on(t, five);
    if (indecomposable != target_edge(x, y)) return false;

    const QBlock kx = blocks_[block_of_[x]].kind;
    const QBlock ky = blocks_[block_of_[y]].kind;
    if (!indecomposable) {
      // Forced intervals of decomposable pairs.
      auto twin_law = [&](int a, QBlock ka, int b, QBlock kb) {
        if (ka.kind != QBlock::Kind::MinusOf && ka.kind != QBlock::Kind::PlusOf) return true;
        if ((kb.kind == QBlock::Kind::MinusOf || kb.kind == QBlock::Kind::PlusOf) && kb.anchor == ka.anchor) return true;
        return t.arc(b, a) == t.arc(b, ka.anchor);
      };
      auto uniform_law = [&](int a, QBlock ka, int b, QBlock kb) {
        if (!in_uniform(ka) || in_uniform(kb)) return true;
        return t.arc(a, b) == t.arc(a, 0);
      };
      if (!twin_law(x, kx, y, ky) || !twin_law(y, ky, x, kx)) return false;
      if (!uniform_law(x, kx, y, ky) || !uniform_law(y, ky, x, kx)) return false;
    }
    // T[<X> u {u}] and T[X(u) u {u}] admit no 3-cycle through u.
    for (int u = 0; u < 3; ++u) {
      const bool both_uniform = in_uniform(kx) && in_uniform(ky);
      const bool both_twins = !in_uniform(kx) && !in_uniform(ky) && kx.anchor == u && ky.anchor == u;
      if ((both_uniform || both_twins) && !is_transitive_on(t, VertexSet{u, x, y})) return false;
    }
    return true;
  }

  void descend(std::size_t index, const std::vector<std::vector<bool>>& domains, AssemblyResult& result,
               std::set<CanonicalCode>& codes) {
    if (index == pairs_.size()) {
      ++result.leaves_explored;
      Tournament t = Tournament::from_out_masks(out_);
      if (accept(t)) {
        codes.insert(canonical_code(t));
        result.solutions.push_back(std::move(t));
      }
      return;
    }
    const auto [x, y] = pairs_[index];
    for (bool x_beats_y : domains[index]) {
      if (x_beats_y) {
        set_arc(x, y);
      } else {
        set_arc(y, x);
      }
      descend(index + 1, domains, result, codes);
    }
  }

  bool accept(const Tournament& t) const {
    if (!is_indecomposable(t)) return false;
    const OutsidePartition p = outside_partition(t, core_);
    for (const BlockPlan& plan : blocks_) {
      if (p.block(plan.kind) != plan.members) return false;
    }
    if (!check_sayar(t, core_).ok) return false;
    std::set<VertexSet> expected;
    for (std::size_t i = 0; i < blocks_.size(); i += 2) expected.insert(blocks_[i].members | blocks_[i + 1].members);
    const auto found = connected_components(outside_graph(t, core_));
    return std::set<VertexSet>(found.begin(), found.end()) == expected;
  }

  int n_ = 0;
  VertexSet core_;
  std::vector<BlockPlan> blocks_;
  std::vector<int> block_of_;
  std::vector<int> target_degree_;
  std::vector<std::uint64_t> out_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

AssemblyResult assemble_family_search(const FamilySpec& spec) { return Assembler(spec).run(); }

Tournament assemble_family(const FamilySpec& spec) {
  AssemblyResult result = assemble_family_search(spec);
  if (result.solutions.empty()) {
    throw Error(ErrorCode::InfeasibleSpec, "no tournament realises " + spec.to_string());
  }
  if (result.classes > 1) {
    throw Error(ErrorCode::AmbiguousSpec,
                spec.to_string() + " admits " + std::to_string(result.classes) + " non-isomorphic assemblies");
  }
  Tournament t = std::move(result.solutions.front());
  return is_dual_family(spec.family) ? dual(t) : t;
}

std::vector<FamilySpec> family_specs_of_size(int n) {
  std::vector<FamilySpec> specs;
  if (n < 7 || n % 2 == 0) return specs;
  const int total = (n - 3) / 2;
  for (Family f : all_families()) {
    const std::size_t parts = family_component_blocks(f).size();
    std::vector<int> sizes(parts, 1);
    // Ordered compositions of `total` into `parts` positive parts.
    auto emit = [&](auto&& self, std::size_t index, int remaining) -> void {
      if (index + 1 == parts) {
        if (remaining >= 1) {
          sizes[index] = remaining;
          specs.push_back({f, sizes, {}});
        }
        return;
      }
      for (int m = 1; m <= remaining - static_cast<int>(parts - index - 1); ++m) {
        sizes[index] = m;
        self(self, index + 1, remaining - m);
      }
    };
    emit(emit, 0, total);
  }
  return specs;
}

}  // namespace tdecomp
