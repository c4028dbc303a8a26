#include <doctest.h>

#include <algorithm>
#include <random>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/equivalence.hpp"
#include "sgchrom/error.hpp"
#include "support.hpp"

using namespace sgc;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::UsageError;
}

std::uint64_t total(const ClassInventory& inv) {
  std::uint64_t s = 0;
  for (auto k : inv.orbit_sizes) s += k;
  return s;
}

}  // namespace

TEST_CASE("isomorphism search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, 7);
    const auto p = testing::random_permutation(rng, 7);
    const auto h = relabel(g, p);
    const auto r = find_isomorphism(g, h);
    REQUIRE(r.found);
    CHECK(relabel(g, r.permutation) == h);
  }
  CHECK_FALSE(are_isomorphic(complete_graph(3, Sign::Positive), complete_graph(3, Sign::Negative)));
  CHECK_FALSE(are_isomorphic(SignedGraph(2), SignedGraph(3)));
  CHECK(are_isomorphic(SignedGraph(), SignedGraph()));
  CHECK_FALSE(are_isomorphic(fixture("G1"), fixture("G2")));
  Budget tight;
  tight.max_search_nodes = 3;
  CHECK(code_of([&] { find_isomorphism(fixture("petersen"), fixture("petersen"), tight); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("switching isomorphism") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testing::random_graph(rng, 6);
    const auto h = relabel(switch_vertices(g, testing::random_subset(rng, 6)), testing::random_permutation(rng, 6));
    const auto r = find_switching_isomorphism(g, h);
    REQUIRE(r.found);
    CHECK(relabel(g, r.permutation) == switch_vertices(h, r.switching_set));
  }
  const auto r = find_switching_isomorphism(fixture("G1"), fixture("G2"));
  CHECK_FALSE(r.found);
  CHECK_FALSE(r.transcript.empty());
  CHECK(r.isomorphism_searches > 0);
  CHECK(are_switching_isomorphic(complete_graph(2, Sign::Positive), complete_graph(2, Sign::Negative)));
  CHECK_FALSE(are_switching_isomorphic(complete_graph(3, Sign::Positive), complete_graph(3, Sign::Negative)));
  CHECK_FALSE(are_switching_isomorphic(fixture("Sigma3"), fixture("Sigma4")));
  const auto early = find_switching_isomorphism(complete_graph(3, Sign::Positive), complete_graph(3, Sign::Negative));
  CHECK_FALSE(early.found);
  CHECK(early.isomorphism_searches == 0);
}

TEST_CASE("negative triangles") {
  CHECK(negative_triangle_count(complete_graph(4, Sign::Negative)) == 4);
  CHECK(negative_triangle_count(complete_graph(4, Sign::Positive)) == 0);
  CHECK(negative_triangle_count(fixture("G1")) == 1);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(rng, 6, 0.7);
    CHECK(negative_triangle_count(switch_vertices(g, testing::random_subset(rng, 6))) == negative_triangle_count(g));
  }
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(fixture("petersen")).size() == 120);
  CHECK(automorphisms(complete_graph(4, Sign::Positive)).size() == 24);
  CHECK(automorphisms(fixture("gem")).size() == 2);
  CHECK(automorphisms(SignedGraph()).size() == 1);
  const auto gens = automorphism_generators(fixture("petersen"));
  CHECK(gens.size() <= 10);
  // Closure of the generators is the full group.
  std::vector<std::vector<int>> group{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
  for (std::size_t i = 0; i < group.size(); ++i)
    for (const auto& s : gens) {
      std::vector<int> c(10);
      for (int v = 0; v < 10; ++v) c[static_cast<std::size_t>(v)] = s[static_cast<std::size_t>(group[i][static_cast<std::size_t>(v)])];
      if (std::find(group.begin(), group.end(), c) == group.end()) group.push_back(c);
    }
  CHECK(group.size() == 120);
}

TEST_CASE("signatures") {
  const auto k4 = complete_graph(4, Sign::Positive);
  for (std::uint64_t mask = 0; mask < 64; ++mask) CHECK(signature_mask(apply_signature(k4, mask)) == mask);
  CHECK(apply_signature(k4, 63) == complete_graph(4, Sign::Negative));
}

TEST_CASE("mode names") {
  CHECK(parse_mode("iso") == EquivalenceMode::Isomorphism);
  CHECK(parse_mode("switch") == EquivalenceMode::SwitchingIsomorphism);
  CHECK(parse_mode("switching_iso") == EquivalenceMode::SwitchingIsomorphism);
  CHECK(parse_mode("switching") == EquivalenceMode::Switching);
  CHECK(mode_name(EquivalenceMode::Isomorphism) == "iso");
  CHECK(code_of([] { parse_mode("other"); }) == ErrorCode::UsageError);
}

TEST_CASE("class enumeration") {
  const int switching_counts[] = {1, 1, 1, 2, 3, 7, 16};
  for (int n = 0; n <= 6; ++n) {
    const auto inv = enumerate_classes(complete_graph(n, Sign::Positive), EquivalenceMode::SwitchingIsomorphism);
    CHECK(inv.class_count() == static_cast<std::size_t>(switching_counts[n]));
    CHECK(total(inv) == std::uint64_t{1} << (n * (n - 1) / 2));
    CHECK(std::is_sorted(inv.masks.begin(), inv.masks.end()));
  }
  const int iso_counts[] = {1, 1, 2, 4, 11, 34};
  for (int n = 0; n <= 5; ++n)
    CHECK(enumerate_classes(complete_graph(n, Sign::Positive), EquivalenceMode::Isomorphism).class_count() ==
          static_cast<std::size_t>(iso_counts[n]));
  const auto p = fixture("petersen");
  CHECK(enumerate_classes(p, EquivalenceMode::SwitchingIsomorphism).class_count() == 6);
  CHECK(enumerate_classes(p, EquivalenceMode::Switching).class_count() == 64);
  const auto gem = enumerate_classes(fixture("G1"), EquivalenceMode::SwitchingIsomorphism);
  CHECK(gem.underlying == fixture("gem"));
  for (std::size_t i = 0; i < gem.class_count(); ++i) {
    CHECK(gem.representatives[i] == apply_signature(gem.underlying, gem.masks[i]));
    for (std::size_t j = i + 1; j < gem.class_count(); ++j)
      CHECK_FALSE(are_switching_isomorphic(gem.representatives[i], gem.representatives[j]));
  }
  Budget tight;
  tight.max_orbit_edges = 10;
  CHECK(code_of([&] { enumerate_classes(p, EquivalenceMode::Isomorphism, tight); }) == ErrorCode::BudgetExceeded);
}
