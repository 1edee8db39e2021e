#include "support/testkit.hpp"

#include <doctest.h>

using namespace egb;

TEST_CASE("IncMap values and extension") {
  const IncMap rho{1, 3};
  CHECK(rho(0) == 1);
  CHECK(rho(1) == 3);
  CHECK(rho(2) == 4);
  CHECK(rho(10) == 12);
  CHECK(IncMap::identity()(7) == 7);
  CHECK(IncMap{0, 1, 2}.is_identity());
  CHECK(IncMap{0, 2, 3} == IncMap{0, 2});
  CHECK_THROWS_AS(IncMap({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(IncMap({3, 1}), std::invalid_argument);
}

TEST_CASE("tau generators") {
  CHECK(tau(0) == IncMap{1});
  CHECK(tau(2)(1) == 1);
  CHECK(tau(2)(2) == 3);
  CHECK(image_complement(tau(3)) == std::vector<Index>{3});
  CHECK(image_complement(IncMap{1, 3}) == std::vector<Index>{0, 2});
}

TEST_CASE("standard form rewrites out-of-order neighbours") {
  CHECK(standard_form(std::vector<Index>{1, 0}) == TauWord{0, 0});
  CHECK(standard_form(std::vector<Index>{2, 0}) == TauWord{0, 1});
  CHECK(standard_form(std::vector<Index>{0, 2}) == TauWord{0, 2});
  CHECK(standard_form(std::vector<Index>{}) == TauWord{});
  CHECK(map_to_tau(IncMap{1, 3}) == TauWord{0, 1});
  CHECK(tau_to_map(std::vector<Index>{0, 1}) == IncMap{1, 3});
}

TEST_CASE("compose is function composition") {
  const IncMap a{2, 5}, b{1, 2};
  const IncMap c = compose(a, b);
  for (Index i = 0; i < 20; ++i) CHECK(c(i) == a(b(i)));
  CHECK(compose(a, IncMap::identity()) == a);
  CHECK(compose(IncMap::identity(), a) == a);
}

TEST_CASE("increasing maps enumerate all combinations in order") {
  const auto maps = increasing_maps(2, 4);
  CHECK(maps.size() == 6);
  CHECK(maps.front() == IncMap{0, 1});
  CHECK(maps.back() == IncMap{2, 3});
  CHECK(std::is_sorted(maps.begin(), maps.end()));
  CHECK(increasing_maps(0, 3).size() == 1);
  CHECK(increasing_maps(3, 3).size() == 1);
  CHECK_THROWS_AS(increasing_maps(4, 3), std::invalid_argument);
  std::size_t seen = 0;
  for_each_increasing(2, 5, [&](std::span<const Index>) { return ++seen < 3; });
  CHECK(seen == 3);
  CHECK(testkit::ref_increasing(3, 6).size() == increasing_maps(3, 6).size());
}

TEST_CASE("property: composition and words agree with pointwise evaluation") {
  const auto r = testkit::inc_monoid_suite(2000);
  INFO(r.failure);
  CHECK(r.ok());
  CHECK(r.cases == 2000);
}
