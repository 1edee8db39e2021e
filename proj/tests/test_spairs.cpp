#include "support/testkit.hpp"

#include <doctest.h>

using namespace egb;

namespace {

// Pairs of increasing maps into [k] whose images cover [k], counted directly.
std::size_t ref_interlacings(std::size_t wf, std::size_t wg) {
  std::size_t n = 0;
  for (std::size_t k = std::max(wf, wg); k <= wf + wg; ++k)
    for (const auto& a : testkit::ref_increasing(wf, k))
      for (const auto& b : testkit::ref_increasing(wg, k)) {
        std::vector<bool> hit(k);
        for (Index v : a) hit[v] = true;
        for (Index v : b) hit[v] = true;
        n += std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
      }
  return n;
}

}  // namespace

TEST_CASE("interlacing counts") {
  CHECK(interlacings(1, 1).size() == 3);
  CHECK(interlacings(1, 2).size() == 5);
  CHECK(interlacings(2, 2).size() == 13);
  CHECK(interlacings(0, 0).size() == 1);
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) CHECK(interlacings(a, b).size() == ref_interlacings(a, b));
}

TEST_CASE("every interlacing covers its codomain") {
  for (const auto& [s, t] : interlacings(2, 3)) {
    const Index k = std::max(s.domain_size() ? s(1) : 0, t(2)) + 1;
    std::vector<bool> hit(k);
    hit[s(0)] = hit[s(1)] = true;
    for (Index i = 0; i < 3; ++i) hit[t(i)] = true;
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));
  }
}

TEST_CASE("S-pair generators") {
  const auto R = testkit::ring_x();
  const Polynomial f = parse_polynomial(R, "x[0]^2 - x[0]");
  // self pair: 3 interlacings minus the diagonal; the two disjoint ones are coprime
  CHECK(spair_generators(f, f, {true, 0, 0}).empty());
  CHECK(spair_generators(f, f, {false, 0, 0}).size() == 2);
  const Polynomial g = parse_polynomial(R, "x[1]*x[0] - 1");
  const auto gens = spair_generators(f, g, {true, 0, 1});
  CHECK(gens.size() == 2);
  for (const auto& gen : gens) {
    CHECK(mul(gen.left.cofactor, act(gen.left.map, f.lm())) == gen.overlap);
    CHECK(mul(gen.right.cofactor, act(gen.right.map, g.lm())) == gen.overlap);
    const Polynomial s = s_polynomial(gen, f, g);
    CHECK((s.is_zero() || R->order().less(s.lm(), gen.overlap)));
    CHECK(spair_width(gen, f, g) >= gen.overlap.width());
  }
  CHECK_THROWS_AS(spair_generators(Polynomial(R), g), std::domain_error);
}
