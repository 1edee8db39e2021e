#include "support/testkit.hpp"

#include <doctest.h>

using namespace egb;

namespace {

Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

}  // namespace

TEST_CASE("terms are sorted, combined and nonzero") {
  const auto R = testkit::ring_x();
  const Polynomial f = P(R, "x[0] + x[1]^2 - x[0] + 3");
  CHECK(format(f) == "x[1]^2 + 3");
  CHECK(f.size() == 2);
  CHECK(f.width() == 2);
  CHECK(P(R, "x[2] - x[2]").is_zero());
  CHECK(format(Polynomial(R)) == "0");
  CHECK_THROWS_AS(Polynomial(R).lm(), std::domain_error);
  CHECK(format(P(R, "3/4*x[0]")) == "3/4*x[0]");
  CHECK(format(P(R, "-2*x[1] + x[0]").monic()) == "x[1] - 1/2*x[0]");
}

TEST_CASE("arithmetic") {
  const auto R = testkit::ring_x();
  const Polynomial f = P(R, "x[1] + x[0]"), g = P(R, "x[1] - x[0]");
  CHECK(mul(f, g) == P(R, "x[1]^2 - x[0]^2"));
  CHECK(add(f, g) == P(R, "2*x[1]"));
  CHECK(scale(f, 0).is_zero());
  CHECK(act(IncMap{3, 5}, f) == P(R, "x[5] + x[3]"));
  CHECK(sub_scaled(P(R, "x[4]*x[2]"), 1, P(R, "x[4]").lm(), IncMap{2}, P(R, "x[0] + 1")) ==
        P(R, "-x[4]"));
  const auto S = testkit::ring_xy();
  CHECK_THROWS_AS(add(f, P(S, "x[0]")), std::invalid_argument);
}

TEST_CASE("orbit reduction") {
  const auto R = testkit::ring_x();
  const Polynomial g = P(R, "x[1]*x[0] - x[0]");
  const Polynomial f = P(R, "x[5]*x[3]^2");
  ReductionTrace t;
  const Polynomial h = normal_form(f, {g}, {}, &t);
  CHECK(h == P(R, "x[3]^2"));
  CHECK(t.steps.size() == 1);
  CHECK(t.steps[0].witness == IncMap{3, 5});
  CHECK(replay(f, {g}, t) == h);
  CHECK(normal_form(f, {g}, {.action = Action::trivial}) == f);
  CHECK(normal_form(f, {g}, {.action = Action::inc, .top_only = false, .max_width = 4}) == f);
  CHECK(pi_reduce_step(f, g).value() == h);
  CHECK_FALSE(pi_reduce_step(P(R, "x[0]"), g));
  CHECK(normal_form(f, {}) == f);
  CHECK(normal_form(Polynomial(R), {g}).is_zero());
  ReductionTrace bad{{{7, IncMap{}, Monomial{}, 1}}};
  CHECK_THROWS_AS(replay(f, {g}, bad), std::out_of_range);
}

TEST_CASE("top-only reduction leaves the tail") {
  const auto R = testkit::ring_x(OrderKind::grlex);
  const Polynomial g = P(R, "x[1]^2");
  const Polynomial f = P(R, "x[0]^3 + x[2]^2");
  CHECK(normal_form(f, {g}, {.action = Action::inc, .top_only = true}) == f);
  CHECK(normal_form(f, {g}) == P(R, "x[0]^3"));
}

TEST_CASE("property: normal form idempotence and trace replay") {
  const auto r = testkit::normal_form_suite(1500);
  INFO(r.failure);
  CHECK(r.ok());
}
