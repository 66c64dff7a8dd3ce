#include <doctest.h>

#include <set>

#include "test_support.hpp"

using namespace tdecomp;
using namespace tdecomp::testing;

namespace {

std::size_t brute_force_class_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<CanonicalCode> codes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    codes.insert(canonical_code(from_pair_bits(n, bits)));
  }
  return codes.size();
}

}  // namespace

TEST_CASE("relabellings of C3 share one code") {
  std::vector<int> perm{0, 1, 2};
  const CanonicalCode reference = canonical_code(gen_c3());
  do {
    CHECK(canonical_code(relabel(gen_c3(), perm)) == reference);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("code layout") {
  const CanonicalCode c3 = canonical_code(gen_c3());
  CHECK(c3.vertex_count() == 3);
  // Bits (0,1), (0,2), (1,2): a 3-cycle reads 101 or 010, so 010 wins.
  CHECK(c3.hex() == "0340");
  CHECK(canonical_code(gen_total_order(1)).hex() == "01");
}

TEST_CASE("code equals the brute-force minimum over all relabellings") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Tournament t = random_tournament(n, rng);
    CHECK(canonical_code(t) == brute_force_code(t));
  }
}

TEST_CASE("brute-force class counts") {
  CHECK(brute_force_class_count(3) == 2);
  CHECK(brute_force_class_count(4) == 4);
  CHECK(brute_force_class_count(5) == 12);
  CHECK(brute_force_class_count(6) == 56);
}

TEST_CASE("U7 and W7 are not isomorphic") {
  const Tournament u7 = gen_critical(CriticalFamily::U, 7);
  const Tournament w7 = gen_critical(CriticalFamily::W, 7);
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
  bool found = false;
  do {
    if (relabel(u7, perm) == w7) found = true;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  CHECK_FALSE(found);
  CHECK_FALSE(is_isomorphic(u7, w7));
  CHECK(canonical_code(u7) != canonical_code(w7));
}

TEST_CASE("code is invariant under random relabelling") {
  std::mt19937_64 rng(12);
  std::vector<Tournament> samples{gen_paley7(), gen_critical(CriticalFamily::U, 9), gen_total_order(10),
                                  gen_h_figure3(3, 6)};
  for (int n : {8, 11, 13}) samples.push_back(random_tournament(n, rng));
  for (const auto& t : samples) {
    const CanonicalCode reference = canonical_code(t);
    for (int round = 0; round < 100; ++round) {
      CHECK(canonical_code(relabel(t, random_permutation(t.size(), rng))) == reference);
    }
  }
}

TEST_CASE("canonical form and isomorphisms") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Tournament t = random_tournament(n, rng);
    const Tournament c = canonical_tournament(t);
    CHECK(labelled_code(c) == canonical_code(t));
    CHECK(is_canonical(c));

    const auto perm = random_permutation(n, rng);
    const Tournament moved = relabel(t, perm);
    const auto f = find_isomorphism(t, moved);
    REQUIRE(f.has_value());
    CHECK(relabel(t, *f) == moved);
    CHECK(score_sequence(t) == score_sequence(moved));
  }
}

TEST_CASE("isomorphism is an equivalence on a sample") {
  std::mt19937_64 rng(14);
  std::vector<Tournament> sample;
  for (int i = 0; i < 20; ++i) {
    const Tournament base = random_tournament(5, rng);
    sample.push_back(base);
    sample.push_back(relabel(base, random_permutation(5, rng)));
  }
  for (const auto& a : sample) {
    CHECK(is_isomorphic(a, a));
    for (const auto& b : sample) {
      CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
      CHECK(is_isomorphic(a, b) == (canonical_code(a) == canonical_code(b)));
      for (const auto& c : sample) {
        if (is_isomorphic(a, b) && is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
      }
    }
  }
  CHECK_FALSE(is_isomorphic(gen_c3(), gen_total_order(3)));
  CHECK_FALSE(is_isomorphic(gen_c3(), gen_total_order(4)));
}

TEST_CASE("is_canonical rejects non-minimal labellings") {
  CHECK(is_canonical(canonical_tournament(gen_paley7())));
  std::mt19937_64 rng(15);
  int rejected = 0;
  for (int round = 0; round < 50; ++round) {
    const Tournament t = random_tournament(7, rng);
    CHECK(is_canonical(t) == (labelled_code(t) == canonical_code(t)));
    rejected += is_canonical(t) ? 0 : 1;
  }
  CHECK(rejected > 0);
}
