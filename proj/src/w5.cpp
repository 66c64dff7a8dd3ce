#include "tdecomp/w5.hpp"

#include <array>
#include <limits>

#include "tdecomp/canonical.hpp"
#include "tdecomp/decomposition.hpp"
#include "tdecomp/generators.hpp"

namespace tdecomp {

namespace {

constexpr int kMinimalityScanLimit = 24;

// Orientation pattern of T[Z] for a 5-subset Z: ten bits for the pairs of
// Z in lexicographic order, first pair most significant.
int five_pattern(const Tournament& t, VertexSet five) {
  int z[5];
  int k = 0;
  for (int v : five) z[k++] = v;
  int pattern = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pattern = (pattern << 1) | (t.arc(z[i], z[j]) ? 1 : 0);
  }
  return pattern;
}

// Which of the 1024 labelled 5-vertex tournaments are copies of W5, decided
// once through the canonical code of W5.
const std::array<bool, 1024>& w5_patterns() {
  static const std::array<bool, 1024> table = [] {
    std::array<bool, 1024> result{};
    const CanonicalCode w5 = canonical_code(gen_critical(CriticalFamily::W, 5));
    for (int pattern = 0; pattern < 1024; ++pattern) {
      int bit = 9;
      const Tournament t = Tournament::from_predicate(5, [&](int, int) { return (pattern >> bit--) & 1; });
      result[pattern] = canonical_code(t) == w5;
    }
    return result;
  }();
  return table;
}

template <typename Visit>
void for_each_five_subset(int n, Visit&& visit) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) visit(VertexSet{a, b, c, d, e});
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Tournament& pattern, const Tournament& t) : p_(pattern), t_(t) {
    image_.assign(static_cast<std::size_t>(p_.size()), -1);
  }

  std::optional<std::vector<int>> run() {
    if (p_.size() > t_.size()) return std::nullopt;
    if (extend(0, t_.vertices())) return image_;
    return std::nullopt;
  }

 private:
  bool extend(int p, VertexSet unused) {
    if (p == p_.size()) return true;
    const int need_out = p_.out(p).size();
    const int need_in = p_.size() - 1 - need_out;
    VertexSet candidates = unused;
    for (int q = 0; q < p; ++q) {
      candidates &= p_.arc(p, q) ? t_.in(image_[q]) : t_.out(image_[q]);
    }
    for (int v : candidates) {
      const int out = t_.out(v).size();
      if (out < need_out || t_.size() - 1 - out < need_in) continue;
      image_[p] = v;
      if (extend(p + 1, unused.without(v))) return true;
    }
    image_[p] = -1;
    return false;
  }

  const Tournament& p_;
  const Tournament& t_;
  std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Tournament& pattern, const Tournament& t) {
  return EmbeddingSearch(pattern, t).run();
}

bool embeds(const Tournament& pattern, const Tournament& t) { return find_embedding(pattern, t).has_value(); }

bool induces_w5(const Tournament& t, VertexSet five) {
  check_subset(t, five);
  if (five.size() != 5) throw Error(ErrorCode::BadParameters, "W5 test needs exactly 5 vertices");
  return w5_patterns()[five_pattern(t, five)];
}

W5Report w5_vertex_set(const Tournament& t) {
  W5Report report;
  report.witness.assign(static_cast<std::size_t>(t.size()), VertexSet{});
  const auto& table = w5_patterns();
  // Subsets come in lexicographic order, so the first hit per vertex is its
  // least witness.
  for_each_five_subset(t.size(), [&](VertexSet z) {
    if (z.subset_of(report.w5_vertices) || !table[five_pattern(t, z)]) return;
    for (int v : z - report.w5_vertices) report.witness[v] = z;
    report.w5_vertices |= z;
  });
  return report;
}

VertexSet w5_vertices(const Tournament& t) {
  VertexSet result;
  const auto& table = w5_patterns();
  for_each_five_subset(t.size(), [&](VertexSet z) {
    if (!z.subset_of(result) && table[five_pattern(t, z)]) result |= z;
  });
  return result;
}

bool is_family_t_member(const Tournament& t) {
  if (t.size() < 3 || !is_indecomposable(t)) return false;
  return w5_vertices(t).size() == t.size() - 2;
}

int c_invariant(const Tournament& t) {
  if (!is_family_t_member(t)) throw Error(ErrorCode::NotFamilyT, "c(T) is defined on family-T members only");
  const VertexSet sigma = support(t);
  const VertexSet w5 = w5_vertices(t);
  int best = std::numeric_limits<int>::max();
  for (int x : w5) {
    const VertexSet core = sigma.with(x);
    if (core.size() != 3 || is_transitive_on(t, core)) continue;
    best = std::min(best, static_cast<int>(connected_components(outside_graph(t, core)).size()));
  }
  if (best == std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::NoEligibleVertex, "no x in W5(T) makes sigma(T) u {x} a 3-cycle");
  }
  return best;
}

namespace {

void require_minimality_input(const Tournament& t) {
  if (t.size() < 3 || !is_indecomposable(t)) {
    throw Error(ErrorCode::NotIndecomposable, "minimality is defined for indecomposable tournaments on >= 3 vertices");
  }
  if (t.size() > kMinimalityScanLimit) {
    throw Error(ErrorCode::BudgetExceeded, "minimality scan is limited to 24 vertices");
  }
}

}  // namespace

bool is_minimal_for_pair(const Tournament& t, int x, int y) {
  check_vertex(t, x);
  check_vertex(t, y);
  if (x == y) throw Error(ErrorCode::BadParameters, "minimality needs two distinct vertices");
  require_minimality_input(t);
  const VertexSet pair{x, y};
  const std::uint64_t rest = (t.vertices() - pair).bits();
  // Every proper superset of the pair: pair plus a proper subset of the rest.
  for (std::uint64_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
    if (sub == rest) continue;
    if (is_indecomposable_on(t, pair | VertexSet(sub))) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> minimal_pairs(const Tournament& t) {
  require_minimality_input(t);
  const int n = t.size();
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(n), 0);
  const std::uint64_t all = t.vertices().bits();
  for (std::uint64_t s = 1; s < all; ++s) {
    const VertexSet subset(s);
    if (subset.size() < 3 || !is_indecomposable_on(t, subset)) continue;
    for (int v : subset) covered[v] |= s;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!((covered[x] >> y) & 1U)) pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

}  // namespace tdecomp
