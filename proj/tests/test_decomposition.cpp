#include <doctest.h>

#include "tdecomp/error.hpp"
#include "tdecomp/verification.hpp"
#include "test_support.hpp"

using namespace tdecomp;
using namespace tdecomp::testing;

namespace {

// Indecomposable cores of the given size.
std::vector<VertexSet> cores_of_size(const Tournament& t, int k) {
  std::vector<VertexSet> cores;
  const std::uint64_t all = t.vertices().bits();
  for (std::uint64_t s = 1; s <= all; ++s) {
    const VertexSet x(s);
    if (x.size() == k && is_indecomposable_on(t, x)) cores.push_back(x);
  }
  return cores;
}

bool definitionally_partially_critical(const Tournament& t, VertexSet x) {
  if (!is_indecomposable_on(t, x)) return false;
  for (int v : t.vertices() - x) {
    if (is_indecomposable_on(t, t.vertices().without(v))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_interval") {
  const Tournament c3 = gen_c3();
  CHECK(is_interval(c3, VertexSet{}));
  CHECK(is_interval(c3, VertexSet{1}));
  CHECK(is_interval(c3, c3.vertices()));
  CHECK_FALSE(is_interval(c3, VertexSet{0, 1}));
  CHECK(is_interval(gen_total_order(3), VertexSet{0, 1}));
  CHECK_THROWS_AS(is_interval(c3, VertexSet{3}), Error);
}

TEST_CASE("indecomposability") {
  for (std::uint64_t bits = 0; bits < 64; ++bits) CHECK_FALSE(is_indecomposable(from_pair_bits(4, bits)));
  CHECK(is_indecomposable(gen_critical(CriticalFamily::W, 5)));
  CHECK(is_indecomposable(gen_c3()));
  for (int n = 3; n <= 12; ++n) CHECK_FALSE(is_indecomposable(gen_total_order(n)));
  CHECK(is_indecomposable(gen_total_order(1)));
  CHECK(is_indecomposable(gen_total_order(2)));
}

TEST_CASE("nontrivial intervals match a subset scan") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 11);
    Tournament t = random_tournament(n, rng);
    // Plant an interval now and then so that the scan has something to find.
    if (n >= 4 && round % 2 == 0) {
      const int a = static_cast<int>(rng() % n);
      const int b = (a + 1) % n;
      t = Tournament::from_predicate(n, [&](int i, int j) {
        if (j == b && i != a) return t.arc(i, a);
        if (i == b && j != a) return t.arc(a, j);
        return t.arc(i, j);
      });
    }
    const auto intervals = nontrivial_intervals(t);
    CHECK(intervals == subset_scan_intervals(t));
    CHECK(is_indecomposable(t) == intervals.empty());
    CHECK(nontrivial_intervals(dual(t)) == intervals);
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_tournaments(n)) CHECK(nontrivial_intervals(t) == subset_scan_intervals(t));
  }
  CHECK(nontrivial_intervals(gen_total_order(5)).size() == 9);
}

TEST_CASE("interval closure") {
  const Tournament t = gen_total_order(5);
  CHECK(interval_closure(t, t.vertices(), VertexSet{1, 3}) == VertexSet{1, 2, 3});
  const Tournament w5 = gen_critical(CriticalFamily::W, 5);
  CHECK(interval_closure(w5, w5.vertices(), VertexSet{0, 1}) == w5.vertices());
}

TEST_CASE("support") {
  CHECK(support(gen_critical(CriticalFamily::T, 7)).empty());
  CHECK(support(gen_paley7()) == VertexSet::range(7));
  CHECK(support(family_member(Family::H, {1, 1})) == VertexSet{0, 1});
  CHECK(support(gen_c3()) == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(support(gen_total_order(4)), Error);
  for (CriticalFamily f : {CriticalFamily::T, CriticalFamily::U, CriticalFamily::W}) {
    for (int size = 5; size <= 13; size += 2) CHECK(support(gen_critical(f, size)).empty());
  }
  for (int n = 5; n <= 7; ++n) {
    for (const auto& t : enumerate_tournaments(n, [](const Tournament& t) { return is_indecomposable(t); })) {
      CHECK(support(t) == support(dual(t)));
    }
  }
  try {
    support(gen_total_order(4));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIndecomposable);
  }
}

TEST_CASE("outside partition examples") {
  const Tournament w5 = gen_critical(CriticalFamily::W, 5);
  const OutsidePartition p = outside_partition(w5, VertexSet{0, 1, 4});
  CHECK(p.x_plus == VertexSet{2});
  CHECK(p.per_u_plus.at(1) == VertexSet{3});
  CHECK(p.ext.empty());
  CHECK(p.x_minus.empty());
  CHECK(p.nonempty_blocks().size() == 2);
  CHECK(p.block_of(3) == QBlock::plus_of(1));

  CHECK(outside_partition(w5, w5.vertices()).nonempty_blocks().empty());

  const Tournament h7 = family_member(Family::H, {1, 1});
  const OutsidePartition q = outside_partition(h7, VertexSet{0, 1, 2});
  CHECK(q.ext.empty());
  CHECK(q.block(QBlock::plus_of(0)) == VertexSet{3});
  CHECK(q.block(QBlock::minus()) == VertexSet{4});
  CHECK(q.block(QBlock::plus()) == VertexSet{5});
  CHECK(q.block(QBlock::minus_of(1)) == VertexSet{6});
  CHECK(q.nonempty_blocks().size() == 4);

  CHECK_THROWS_AS(outside_partition(w5, VertexSet{0, 1}), Error);
  CHECK_THROWS_AS(outside_partition(w5, VertexSet{0, 1, 2}), Error);
  CHECK(QBlock::plus_of(2).name() == "X+(2)");
  CHECK(QBlock::minus().name() == "X-");
}

TEST_CASE("outside partition blocks partition the outside and obey the pair laws") {
  for (int n = 5; n <= 7; ++n) {
    for (const auto& t : enumerate_tournaments(n, [](const Tournament& t) { return is_indecomposable(t); })) {
      for (int k : {3, 5}) {
        for (VertexSet x : cores_of_size(t, k)) {
          const OutsidePartition p = outside_partition(t, x);
          VertexSet seen;
          for (const auto& [kind, block] : p.nonempty_blocks()) {
            CHECK_FALSE(block.intersects(seen));
            seen |= block;
          }
          CHECK(seen == t.vertices() - x);
          CHECK(p.uniform() == (p.x_minus | p.x_plus));

          for (int a : t.vertices() - x) {
            for (int b : t.vertices() - x) {
              if (a == b) continue;
              const VertexSet s = x | VertexSet{a, b};
              if (is_indecomposable_on(t, s)) continue;
              const auto sub = subtournament(t, s);
              auto local = [&](VertexSet set) {
                VertexSet out;
                for (int k2 = 0; k2 < static_cast<int>(sub.labels.size()); ++k2)
                  if (set.contains(sub.labels[k2])) out = out.with(k2);
                return out;
              };
              const QBlock kind = p.block_of(a);
              if (kind.kind == QBlock::Kind::MinusOf || kind.kind == QBlock::Kind::PlusOf) {
                if (!p.of(kind.anchor).contains(b)) {
                  CHECK(is_interval(sub.tournament, local(VertexSet{kind.anchor, a})));
                }
              } else if (kind.kind == QBlock::Kind::Minus || kind.kind == QBlock::Kind::Plus) {
                if (!p.uniform().contains(b)) CHECK(is_interval(sub.tournament, local(x.with(b))));
              } else if (p.ext.contains(b)) {
                CHECK(is_interval(sub.tournament, local(VertexSet{a, b})));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("outside graph") {
  const Tournament w5 = gen_critical(CriticalFamily::W, 5);
  const UndirectedGraph g = outside_graph(w5, VertexSet{0, 1, 4});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(connected_components(g).size() == 1);
  CHECK(outside_graph(w5, w5.vertices()).edge_count() == 0);

  for (int n = 1; n <= 8; ++n) {
    const UndirectedGraph g2n = gen_g2n(n);
    CHECK(g2n.edge_count() == n * (n + 1) / 2);
    for (int x = 0; x < 2 * n; ++x)
      for (int y = 0; y < 2 * n; ++y)
        if (x != y) CHECK(g2n.has_edge(x, y) == (std::abs(x - y) >= n));
  }
  CHECK(gen_g2n(1).edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(gen_g2n(2).edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
  std::vector<int> degrees;
  const UndirectedGraph g6 = gen_g2n(3);
  for (int v = 0; v < 6; ++v) degrees.push_back(g6.degree(v));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 2, 2, 3, 3});
  CHECK_THROWS_AS(gen_g2n(0), Error);
}

TEST_CASE("partial criticality") {
  const Tournament w5 = gen_critical(CriticalFamily::W, 5);
  CHECK(is_partially_critical(w5, VertexSet{0, 1, 4}));
  CHECK(is_partially_critical(family_member(Family::H, {1, 1}), VertexSet{0, 1, 2}));
  const Tournament p7 = gen_paley7();
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) CHECK_FALSE(is_partially_critical(p7, VertexSet{a, b, c}));
  CHECK_THROWS_AS(is_partially_critical(gen_total_order(5), VertexSet{0, 1, 2}), Error);
  CHECK_THROWS_AS(is_partially_critical(w5, VertexSet{0, 1}), Error);
}

TEST_CASE("check_sayar examples") {
  const Tournament h7 = family_member(Family::H, {1, 1});
  const SayarReport r = check_sayar(h7, VertexSet{0, 1, 2});
  CHECK(r.ok);
  CHECK(r.ext_empty);
  CHECK(r.transitivity_ok);
  REQUIRE(r.components.size() == 2);
  for (const auto& c : r.components) {
    CHECK(c.half_size == 1);
    CHECK(c.ok());
  }
  CHECK(r.components[0].component == VertexSet{3, 4});
  CHECK(r.components[1].component == VertexSet{5, 6});

  const Tournament u7 = gen_critical(CriticalFamily::U, 7);
  bool found = false;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        const VertexSet x{a, b, c};
        if (is_transitive_on(u7, x) || connected_components(outside_graph(u7, x)).size() != 1) continue;
        found = true;
        const SayarReport s = check_sayar(u7, x);
        CHECK(s.ok);
        CHECK(s.components.size() == 1);
        CHECK(s.components.front().half_size == 2);
      }
  CHECK(found);

  CHECK_FALSE(check_sayar(gen_paley7(), VertexSet{0, 1, 3}).ok);
}

TEST_CASE("check_sayar agrees with the definition") {
  long long agreements = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const auto& t : enumerate_tournaments(n, [](const Tournament& t) { return is_indecomposable(t); })) {
      for (int k : {3, 5}) {
        for (VertexSet x : cores_of_size(t, k)) {
          const bool definitional = definitionally_partially_critical(t, x);
          CHECK(check_sayar(t, x).ok == definitional);
          CHECK(is_partially_critical(t, x) == definitional);
          ++agreements;
        }
      }
    }
  }
  CHECK(agreements > 1000);
}

TEST_CASE("G_2n labels of a matched component") {
  const Tournament t = gen_h_figure3(3, 6);
  const SayarReport r = check_sayar(t, VertexSet{0, 1, 2});
  REQUIRE(r.ok);
  const UndirectedGraph g = outside_graph(t, VertexSet{0, 1, 2});
  for (const auto& c : r.components) {
    const int m = c.half_size;
    REQUIRE(static_cast<int>(c.g2n_labels.size()) == 2 * m);
    for (int i = 0; i < 2 * m; ++i)
      for (int j = 0; j < 2 * m; ++j)
        if (i != j) CHECK(g.has_edge(c.g2n_labels[i], c.g2n_labels[j]) == (std::abs(i - j) >= m));
  }
}

TEST_CASE("transitive min and max") {
  CHECK(transitive_min_max(gen_total_order(3)) == std::pair<int, int>{0, 2});
  CHECK(transitive_min_max(dual(gen_total_order(3))) == std::pair<int, int>{2, 0});
  CHECK_THROWS_AS(transitive_min_max(gen_c3()), Error);
  const Tournament w7 = gen_critical(CriticalFamily::W, 7);
  CHECK(transitive_min_max_on(w7, VertexSet{1, 3, 5}) == std::pair<int, int>{1, 5});
}
