#include "tdecomp/tournament.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace tdecomp {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::ConflictingPair: return "ConflictingPair";
    case ErrorCode::SelfArc: return "SelfArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::CoreNotIndecomposable: return "CoreNotIndecomposable";
    case ErrorCode::CoreTooSmall: return "CoreTooSmall";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::AmbiguousSpec: return "AmbiguousSpec";
    case ErrorCode::NotFamilyT: return "NotFamilyT";
    case ErrorCode::NoEligibleVertex: return "NoEligibleVertex";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) bits_ |= std::uint64_t{1} << v;
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, VertexSet s) {
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

namespace {

void check_size(int n) {
  if (n < 0 || n > Tournament::kMaxVertices) {
    throw Error(ErrorCode::BadSize, "tournament size must be in 0..64, got " + std::to_string(n));
  }
}

}  // namespace

Tournament Tournament::from_predicate(int n, const std::function<bool(int, int)>& i_beats_j) {
  check_size(n);
  Tournament t;
  t.n_ = n;
  t.out_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i_beats_j(i, j)) {
        t.out_[i] |= std::uint64_t{1} << j;
      } else {
        t.out_[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return t;
}

Tournament Tournament::from_out_masks(std::vector<std::uint64_t> out) {
  const int n = static_cast<int>(out.size());
  check_size(n);
  Tournament t;
  t.n_ = n;
  t.out_ = std::move(out);
  const std::uint64_t all = VertexSet::range(n).bits();
  for (int x = 0; x < n; ++x) {
    if (t.out_[x] & ~all) {
      throw Error(ErrorCode::VertexOutOfRange, "arc leaves the vertex range at vertex " + std::to_string(x));
    }
    if (t.arc(x, x)) throw Error(ErrorCode::SelfArc, "self-arc at vertex " + std::to_string(x));
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const bool xy = t.arc(x, y);
      const bool yx = t.arc(y, x);
      if (xy && yx) {
        throw Error(ErrorCode::ConflictingPair,
                    "both orientations of {" + std::to_string(x) + "," + std::to_string(y) + "}");
      }
      if (!xy && !yx) {
        throw Error(ErrorCode::MissingPair,
                    "no orientation for {" + std::to_string(x) + "," + std::to_string(y) + "}");
      }
    }
  }
  return t;
}

Tournament Tournament::total_order(int n) {
  return from_predicate(n, [](int, int) { return true; });
}

Tournament Tournament::with_reversed(int x, int y) const {
  check_vertex(*this, x);
  check_vertex(*this, y);
  if (x == y) throw Error(ErrorCode::SelfArc, "cannot reverse a loop");
  Tournament t = *this;
  const std::uint64_t bx = std::uint64_t{1} << x;
  const std::uint64_t by = std::uint64_t{1} << y;
  t.out_[x] ^= by;
  t.out_[y] ^= bx;
  return t;
}

bool is_valid(const Tournament& t) {
  const int n = t.size();
  for (int x = 0; x < n; ++x) {
    if (t.arc(x, x)) return false;
    if ((t.out(x) - t.vertices()).bits() != 0) return false;
    for (int y = x + 1; y < n; ++y) {
      if (t.arc(x, y) == t.arc(y, x)) return false;
    }
  }
  return true;
}

Tournament make_tournament(int n, const std::vector<std::pair<int, int>>& arcs) {
  check_size(n);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : arcs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "arc (" + std::to_string(x) + "," + std::to_string(y) + ") outside 0.." + std::to_string(n - 1));
    }
    if (x == y) throw Error(ErrorCode::SelfArc, "self-arc at vertex " + std::to_string(x));
    if ((out[y] >> x) & 1U) {
      throw Error(ErrorCode::ConflictingPair,
                  "both orientations of {" + std::to_string(x) + "," + std::to_string(y) + "}");
    }
    out[x] |= std::uint64_t{1} << y;
  }
  return Tournament::from_out_masks(std::move(out));
}

void check_vertex(const Tournament& t, int v) {
  if (v < 0 || v >= t.size()) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(t.size() - 1));
  }
}

void check_subset(const Tournament& t, VertexSet s) {
  if (!s.subset_of(t.vertices())) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex set " + s.to_string() + " not within the tournament");
  }
}

InducedTournament subtournament(const Tournament& t, VertexSet x) {
  check_subset(t, x);
  InducedTournament r;
  r.labels = x.to_vector();
  const auto& labels = r.labels;
  r.tournament = Tournament::from_predicate(static_cast<int>(labels.size()),
                                            [&](int i, int j) { return t.arc(labels[i], labels[j]); });
  return r;
}

Tournament dual(const Tournament& t) {
  return Tournament::from_predicate(t.size(), [&](int i, int j) { return t.arc(j, i); });
}

VertexSet out_neighbors(const Tournament& t, int x) {
  check_vertex(t, x);
  return t.out(x);
}

Tournament relabel(const Tournament& t, const std::vector<int>& perm) {
  const int n = t.size();
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorCode::BadParameters, "permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || inverse[perm[v]] != -1) {
      throw Error(ErrorCode::BadParameters, "not a permutation");
    }
    inverse[perm[v]] = v;
  }
  return Tournament::from_predicate(n, [&](int i, int j) { return t.arc(inverse[i], inverse[j]); });
}

bool is_transitive_on(const Tournament& t, VertexSet s) {
  // A tournament is transitive iff its score sequence is 0, 1, ..., k-1.
  std::uint64_t seen = 0;
  for (int v : s) {
    const int score = (t.out(v) & s).size();
    if ((seen >> score) & 1U) return false;
    seen |= std::uint64_t{1} << score;
  }
  return true;
}

bool is_transitive(const Tournament& t) { return is_transitive_on(t, t.vertices()); }

UndirectedGraph::UndirectedGraph(VertexSet vertices, const std::vector<std::pair<int, int>>& edges)
    : vertices_(vertices) {
  for (auto [x, y] : edges) {
    if (x == y || !vertices.contains(x) || !vertices.contains(y)) {
      throw Error(ErrorCode::BadParameters,
                  "edge {" + std::to_string(x) + "," + std::to_string(y) + "} not between distinct vertices");
    }
    adj_[x] |= std::uint64_t{1} << y;
    adj_[y] |= std::uint64_t{1} << x;
  }
}

int UndirectedGraph::edge_count() const {
  int twice = 0;
  for (int v : vertices_) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int x : vertices_) {
    for (int y : neighbors(x)) {
      if (x < y) result.emplace_back(x, y);
    }
  }
  return result;
}

UndirectedGraph UndirectedGraph::induced(VertexSet s) const {
  UndirectedGraph g;
  g.vertices_ = vertices_ & s;
  for (int v : g.vertices_) g.adj_[v] = adj_[v] & g.vertices_.bits();
  return g;
}

std::vector<VertexSet> connected_components(const UndirectedGraph& g) {
  std::vector<VertexSet> components;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet component = VertexSet::single(unseen.min());
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - component;
      component |= frontier;
    }
    components.push_back(component);
    unseen -= component;
  }
  return components;
}

}  // namespace tdecomp
