#include <doctest.h>

#include "tdecomp/error.hpp"
#include "test_support.hpp"

using namespace tdecomp;
using namespace tdecomp::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("vertex sets") {
  const VertexSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.min() == 0);
  CHECK(s.to_string() == "{0,2,5}");
  CHECK(VertexSet{}.to_string() == "{}");
  CHECK((s - VertexSet{0}) == VertexSet{2, 5});
  CHECK(VertexSet::range(3) == VertexSet{0, 1, 2});
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
  CHECK(VertexSet{2}.subset_of(s));
}

TEST_CASE("make_tournament") {
  const Tournament c3 = make_tournament(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3 == gen_c3());
  CHECK(c3.arc(0, 1));
  CHECK(c3.arc(2, 0));
  CHECK_FALSE(c3.arc(0, 2));

  CHECK(make_tournament(1, {}).size() == 1);

  CHECK(code_of([] { make_tournament(2, {{0, 1}, {1, 0}}); }) == ErrorCode::ConflictingPair);
  CHECK(code_of([] { make_tournament(3, {{0, 1}, {1, 2}}); }) == ErrorCode::MissingPair);
  CHECK(code_of([] { make_tournament(2, {{0, 0}}); }) == ErrorCode::SelfArc);
  CHECK(code_of([] { make_tournament(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([] { make_tournament(2, {{-1, 0}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("every constructor yields a valid tournament") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 20; ++n) {
    const Tournament t = random_tournament(n, rng);
    CHECK(is_valid(t));
    CHECK(is_valid(dual(t)));
    CHECK(is_valid(relabel(t, random_permutation(n, rng))));
    CHECK(is_valid(subtournament(t, random_subset(n, rng)).tournament));
    if (n >= 2) CHECK(is_valid(t.with_reversed(0, n - 1)));
  }
  CHECK(is_valid(gen_paley7()));
  CHECK(is_valid(gen_total_order(64)));
}

TEST_CASE("subtournament") {
  const Tournament w7 = gen_critical(CriticalFamily::W, 7);
  const auto head = subtournament(w7, VertexSet::range(6));
  CHECK(head.tournament == gen_total_order(6));
  CHECK(head.labels == std::vector<int>{0, 1, 2, 3, 4, 5});

  std::mt19937_64 rng(2);
  const Tournament t = random_tournament(9, rng);
  CHECK(subtournament(t, t.vertices()).tournament == t);

  const Tournament w5 = gen_critical(CriticalFamily::W, 5);
  const auto tri = subtournament(w5, VertexSet{0, 1, 4});
  CHECK(tri.labels == std::vector<int>{0, 1, 4});
  CHECK(w5.arc(0, 1));
  CHECK(w5.arc(1, 4));
  CHECK(w5.arc(4, 0));
  CHECK_FALSE(is_transitive(tri.tournament));

  CHECK_THROWS_AS(subtournament(w5, VertexSet{7}), Error);
}

TEST_CASE("dual") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 12; ++n) {
    const Tournament t = random_tournament(n, rng);
    CHECK(dual(dual(t)) == t);
  }
  const Tournament t7 = gen_critical(CriticalFamily::T, 7);
  CHECK(is_isomorphic(dual(t7), t7));
  CHECK(is_isomorphic(dual(gen_c3()), gen_c3()));
  CHECK(dual(gen_c3()) != gen_c3());
}

TEST_CASE("subtournament commutes with dual") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Tournament t = random_tournament(n, rng);
    const VertexSet x = random_subset(n, rng);
    if (x.empty()) continue;
    CHECK(subtournament(dual(t), x).tournament == dual(subtournament(t, x).tournament));
  }
}

TEST_CASE("out_neighbors") {
  CHECK(out_neighbors(gen_critical(CriticalFamily::W, 5), 4) == VertexSet{0, 2});
  CHECK(out_neighbors(gen_total_order(4), 0) == VertexSet{1, 2, 3});
  CHECK(out_neighbors(gen_c3(), 2) == VertexSet{0});
  CHECK_THROWS_AS(out_neighbors(gen_c3(), 3), Error);
}

TEST_CASE("relabel moves vertex v to perm[v]") {
  std::mt19937_64 rng(5);
  const Tournament t = random_tournament(8, rng);
  const auto perm = random_permutation(8, rng);
  const Tournament r = relabel(t, perm);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      if (x != y) CHECK(r.arc(perm[x], perm[y]) == t.arc(x, y));
  CHECK_THROWS_AS(relabel(t, {0, 0, 1, 2, 3, 4, 5, 6}), Error);
}

TEST_CASE("transitivity agrees with a triple scan") {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Tournament t = random_tournament(n, rng);
    const VertexSet s = random_subset(n, rng);
    CHECK(is_transitive_on(t, s) == triple_scan_transitive(t, s));
  }
  CHECK(is_transitive(gen_total_order(10)));
  CHECK_FALSE(is_transitive(gen_c3()));
}

TEST_CASE("undirected graphs and components") {
  const UndirectedGraph g(VertexSet{0, 1, 2, 3, 5}, {{0, 1}, {2, 3}, {1, 3}});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(3, 1));
  CHECK(g.degree(3) == 2);
  const auto parts = connected_components(g);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == VertexSet{0, 1, 2, 3});
  CHECK(parts[1] == VertexSet{5});
  CHECK(g.induced(VertexSet{0, 1, 5}).edge_count() == 1);
  CHECK_THROWS_AS(UndirectedGraph(VertexSet{0, 1}, {{0, 2}}), Error);
  CHECK_THROWS_AS(UndirectedGraph(VertexSet{0, 1}, {{1, 1}}), Error);
}
