#include <doctest.h>

#include "posetenum/oracle.hpp"

using namespace posetenum;

TEST_CASE("brute-force families on fixtures") {
  const Poset v = v_poset();
  const SetFamily ideals = brute_ideals(v);
  CHECK(ideals.sets() == std::vector<ElementSet>{{}, {0}, {1}, {0, 1}, {0, 1, 2}});
  const SetFamily anti = brute_antichains(v);
  CHECK(anti.sets() == std::vector<ElementSet>{{}, {0}, {1}, {2}, {0, 1}});
  CHECK(brute_ideals(chain(7)).size() == 8);
  CHECK(brute_antichains(antichain(7)).size() == 128);
  CHECK(brute_ideals(antichain(7)).size() == 128);
  CHECK(brute_ideals(Poset()).size() == 1);
}

TEST_CASE("ideals and antichains are equinumerous") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Poset p = random_poset(1 + seed % 14, 0.1 * (seed % 7), seed);
    CHECK(brute_ideals(p).size() == brute_antichains(p).size());
  }
}

TEST_CASE("oracle refuses large inputs") {
  CHECK_THROWS_AS(brute_ideals(antichain(kOracleMaxElements + 1)), std::invalid_argument);
  CHECK_THROWS_AS(brute_antichains(chain(kOracleMaxElements + 1)), std::invalid_argument);
}

TEST_CASE("set families reject duplicates and canonicalize") {
  CHECK_THROWS_AS(SetFamily({{1}, {0}, {1}}), std::invalid_argument);
  const SetFamily f({{0, 1}, {2}, {}});
  CHECK(f.sets() == std::vector<ElementSet>{{}, {2}, {0, 1}});
  CHECK(f.contains({2}));
  CHECK_FALSE(f.contains({1}));
}

TEST_CASE("permutation and Gray checks") {
  const SetFamily f = brute_ideals(v_poset());
  std::vector<ElementSet> stream = {{}, {1}, {0}, {0, 1}, {0, 1, 2}};
  CHECK(verify_permutation(stream, f));
  CHECK_FALSE(verify_gray(stream, 2).has_value());
  const auto bad = verify_gray(stream, 1);
  REQUIRE(bad.has_value());
  CHECK(bad->index == 2);
  CHECK(bad->distance == 2);

  auto dropped = stream;
  dropped.pop_back();
  CHECK_FALSE(verify_permutation(dropped, f));
  auto repeated = stream;
  repeated.push_back({1});
  CHECK_FALSE(verify_permutation(repeated, f));
  auto foreign = stream;
  foreign.back() = {2};
  CHECK_FALSE(verify_permutation(foreign, f));

  CHECK(symmetric_distance({0, 2, 5}, {2, 3}) == 3);
}
