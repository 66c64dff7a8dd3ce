#include <doctest.h>

#include <set>

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

std::set<std::pair<QBlock, QBlock>> unordered(const std::vector<std::pair<QBlock, QBlock>>& pairs) {
  std::set<std::pair<QBlock, QBlock>> out;
  for (auto [a, b] : pairs) out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  return out;
}

// Component pairs as found by check_sayar on the core {0,1,2}.
std::set<std::pair<QBlock, QBlock>> observed_components(const Tournament& t) {
  const SayarReport r = check_sayar(t, VertexSet{0, 1, 2});
  std::vector<std::pair<QBlock, QBlock>> pairs;
  for (const auto& c : r.components) {
    REQUIRE(c.q1.has_value());
    REQUIRE(c.q2.has_value());
    pairs.emplace_back(*c.q1, *c.q2);
  }
  return unordered(pairs);
}

}  // namespace

TEST_CASE("W5 arcs") {
  const Tournament w5 = gen_critical(CriticalFamily::W, 5);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(w5.arc(i, j));
  CHECK(w5.arc(4, 0));
  CHECK(w5.arc(4, 2));
  CHECK(w5.arc(1, 4));
  CHECK(w5.arc(3, 4));
}

TEST_CASE("T and U tournaments") {
  const Tournament t5 = gen_critical(CriticalFamily::T, 5);
  CHECK(t5.arc(0, 1));
  CHECK_FALSE(t5.arc(0, 3));
  for (int size = 5; size <= 13; size += 2) {
    const int n = size / 2;
    const Tournament t = gen_critical(CriticalFamily::T, size);
    const Tournament u = gen_critical(CriticalFamily::U, size);
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) {
        CHECK(t.arc(i, j) == ((j - i) <= n));
        const bool inside = i >= n + 1 && j >= n + 1;
        CHECK((t.arc(i, j) != u.arc(i, j)) == inside);
      }
  }
  CHECK(code_of([] { gen_critical(CriticalFamily::T, 4); }) == ErrorCode::BadSize);
  CHECK(code_of([] { gen_critical(CriticalFamily::U, 3); }) == ErrorCode::BadSize);
  CHECK(code_of([] { gen_critical(CriticalFamily::W, 8); }) == ErrorCode::BadSize);
}

TEST_CASE("Paley tournament and B6") {
  const Tournament p7 = gen_paley7();
  CHECK(p7.arc(0, 1));
  CHECK(p7.arc(0, 2));
  CHECK(p7.arc(0, 4));
  CHECK_FALSE(p7.arc(0, 3));
  const CanonicalCode deleted = canonical_code(subtournament(p7, p7.vertices().without(0)).tournament);
  for (int x = 1; x < 7; ++x) {
    CHECK(canonical_code(subtournament(p7, p7.vertices().without(x)).tournament) == deleted);
  }
  CHECK(gen_b6() == subtournament(p7, VertexSet::range(6)).tournament);
  CHECK(is_indecomposable(gen_b6()));
}

TEST_CASE("indecomposable parts of critical tournaments stay in their family") {
  for (CriticalFamily f : {CriticalFamily::T, CriticalFamily::U, CriticalFamily::W}) {
    std::set<CanonicalCode> allowed;
    for (int size = 5; size <= 11; size += 2) allowed.insert(canonical_code(gen_critical(f, size)));
    const Tournament t = gen_critical(f, 11);
    long long checked = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << 11); ++s) {
      const VertexSet x(s);
      if (x.size() < 5 || !is_indecomposable_on(t, x)) continue;
      CHECK(allowed.count(canonical_code(subtournament(t, x).tournament)) == 1);
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("explicit H member") {
  const Tournament small = gen_h_figure3(2, 3);
  CHECK(small.size() == 7);
  for (const auto& [kind, block] : outside_partition(small, VertexSet{0, 1, 2}).nonempty_blocks()) {
    CHECK(block.size() == 1);
  }
  const auto h_bullet = unordered(family_component_blocks(Family::H));
  for (int n = 3; 2 * n + 1 <= 13; ++n) {
    for (int k = 2; k + 1 <= n; ++k) {
      const Tournament t = gen_h_figure3(k, n);
      CHECK(t.size() == 2 * n + 1);
      CHECK(check_sayar(t, VertexSet{0, 1, 2}).ok);
      CHECK(observed_components(t) == h_bullet);
      CHECK(is_isomorphic(t, family_member(Family::H, {k - 1, n - k})));
    }
  }
  CHECK(code_of([] { gen_h_figure3(1, 3); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { gen_h_figure3(3, 3); }) == ErrorCode::BadParameters);
}

TEST_CASE("family names") {
  for (Family f : all_families()) CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("Kdual") == Family::Kdual);
  CHECK(std::string(family_name(Family::Ldual)) == "L*");
  CHECK(base_family(Family::Jdual) == Family::J);
  CHECK(is_dual_family(Family::Kdual));
  CHECK_FALSE(is_dual_family(Family::H));
  CHECK(code_of([] { parse_family("Q"); }) == ErrorCode::BadParameters);
}

TEST_CASE("family specs") {
  CHECK(family_specs_of_size(7).size() == 6);
  CHECK(family_specs_of_size(9).size() == 14);
  CHECK(family_specs_of_size(8).empty());
  FamilySpec spec{Family::L, {1, 2, 1}, {}};
  CHECK(spec.vertex_count() == 11);
  CHECK(spec.to_string() == "L(1,2,1)");

  CHECK(code_of([] { family_member(Family::H, {1}); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { family_member(Family::L, {1, 1}); }) == ErrorCode::BadParameters);
  CHECK(code_of([] { family_member(Family::I, {0, 1}); }) == ErrorCode::BadParameters);
  FamilySpec bad_chain{Family::H, {2, 1}, {{0, 0}, {0, 1}, {0}, {0}}};
  CHECK(code_of([&] { assemble_family(bad_chain); }) == ErrorCode::BadParameters);
}

TEST_CASE("assembled members") {
  const Tournament h = family_member(Family::H, {1, 1});
  CHECK(h.size() == 7);
  CHECK(support(h) == VertexSet{0, 1});

  const Tournament l = family_member(Family::L, {1, 1, 1});
  CHECK(l.size() == 9);
  CHECK(connected_components(outside_graph(l, VertexSet{0, 1, 2})).size() == 3);

  const Tournament i = family_member(Family::I, {1, 1});
  CHECK(is_isomorphic(dual(i), i));

  CHECK(is_isomorphic(family_member(Family::Jdual, {1, 2}), dual(family_member(Family::J, {1, 2}))));
}

TEST_CASE("assembled members realise their component bullet") {
  for (int n = 7; n <= 11; n += 2) {
    for (const FamilySpec& spec : family_specs_of_size(n)) {
      if (is_dual_family(spec.family)) continue;
      const AssemblyResult search = assemble_family_search(spec);
      CHECK(search.classes == 1);
      REQUIRE_FALSE(search.solutions.empty());
      const Tournament t = assemble_family(spec);
      CHECK(is_indecomposable(t));
      CHECK(check_sayar(t, VertexSet{0, 1, 2}).ok);
      CHECK(observed_components(t) == unordered(family_component_blocks(spec.family)));
      const auto layout = family_layout(spec);
      const OutsidePartition p = outside_partition(t, VertexSet{0, 1, 2});
      for (const auto& comp : layout) {
        CHECK(p.block(comp.first_kind) == comp.first);
        CHECK(p.block(comp.second_kind) == comp.second);
      }
    }
  }
}

TEST_CASE("chain orders do not change the isomorphism class") {
  std::mt19937_64 rng(31);
  for (const FamilySpec& base : {FamilySpec{Family::H, {2, 3}, {}}, FamilySpec{Family::K, {3, 1}, {}},
                                 FamilySpec{Family::L, {2, 1, 2}, {}}, FamilySpec{Family::Jdual, {2, 2}, {}}}) {
    const Tournament reference = assemble_family(base);
    for (int round = 0; round < 4; ++round) {
      FamilySpec spec = base;
      for (int m : spec.component_sizes) {
        spec.chain_orders.push_back(random_permutation(m, rng));
        spec.chain_orders.push_back(random_permutation(m, rng));
      }
      CHECK(is_isomorphic(assemble_family(spec), reference));
    }
  }
}
