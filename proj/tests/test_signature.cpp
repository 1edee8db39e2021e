#include "egb/signature.hpp"
#include "support/testkit.hpp"

#include <doctest.h>

using namespace egb;

namespace {

Monomial X(const RingPtr& R, Index i, std::uint32_t e = 1) { return Monomial::of(R->variable(0, {i}), e); }

bool contains_up_to_scalar(const std::vector<Polynomial>& basis, const Polynomial& f) {
  return std::any_of(basis.begin(), basis.end(), [&](const Polynomial& g) { return g.monic() == f.monic(); });
}

}  // namespace

TEST_CASE("twisted multiplication") {
  const auto R = testkit::ring_x();
  const TwistedMonomial unit;
  const TwistedMonomial b(X(R, 0), IncMap{});
  CHECK(twisted_mul(unit, b) == b);
  CHECK(twisted_mul(TwistedMonomial(Monomial{}, tau(0)), b) == TwistedMonomial(X(R, 1), tau(0)));
  CHECK(twisted_mul(b, b) == TwistedMonomial(X(R, 0, 2), IncMap{}));
  const auto w = TwistedMonomial::from_word(Monomial{}, std::vector<Index>{1, 0});
  CHECK(w.word() == TauWord{0, 0});
}

TEST_CASE("Schreyer order") {
  const auto R = testkit::ring_x();
  const auto& ord = R->order();
  const std::vector<Monomial> leads = {X(R, 0), X(R, 0)};
  const Signature e0{{}, 0}, e1{{}, 1};
  CHECK(schreyer_compare(e0, e0, leads, ord) == 0);
  CHECK(schreyer_compare(e0, e1, leads, ord) < 0);
  CHECK(schreyer_compare(Signature{TwistedMonomial(X(R, 1), {}), 0}, e1, leads, ord) > 0);
  // equal images, different words: the shorter word is smaller
  const Signature s{TwistedMonomial(Monomial{}, tau(0)), 0};
  const Signature t{TwistedMonomial(X(R, 1), IncMap{}), 0};
  CHECK(schreyer_compare(s, Signature{TwistedMonomial(Monomial{}, IncMap{1, 3}), 0}, leads, ord) < 0);
  CHECK(schreyer_compare(s, t, leads, ord) < 0);
}

TEST_CASE("J-pair takes the larger side") {
  const auto R = testkit::ring_x();
  const auto& ord = R->order();
  const Polynomial f = parse_polynomial(R, "x[1]^2*x[2] + x[0]");
  const Polynomial g = parse_polynomial(R, "x[1]*x[2]^2 + x[0]");
  const std::vector<Monomial> leads = {f.lm()};
  const LabeledPoly pf{{{}, 0}, f};
  const LabeledPoly pg{{TwistedMonomial(X(R, 2), {}), 0}, g};
  const auto js = j_pairs(pf, 0, pg, 1, leads, ord, Action::trivial);
  REQUIRE(js.size() == 1);
  CHECK(js[0].source == 1);
  CHECK(js[0].cofactor == X(R, 1));
  // coprime leads still give a pair
  const LabeledPoly a{{{}, 0}, parse_polynomial(R, "x[0]")}, b{{{}, 1}, parse_polynomial(R, "x[1]")};
  CHECK(j_pairs(a, 0, b, 1, {X(R, 0), X(R, 1)}, ord, Action::trivial).size() == 1);
  CHECK(j_pairs(a, 0, a, 0, {X(R, 0)}, ord, Action::trivial).empty());
}

TEST_CASE("signature division") {
  const auto R = testkit::ring_x();
  const Signature s{TwistedMonomial(X(R, 3), IncMap{1}), 0};
  const auto ds = signature_divisors(s, Signature{{}, 0});
  REQUIRE(ds.size() == 1);
  CHECK(ds[0] == s.tm);
  CHECK(signature_divisors(s, Signature{{}, 1}).empty());
  CHECK(signature_divisors(Signature{{}, 0}, s).empty());
  // (x[3], tau_0) = t * (1, tau_0) needs t's map to fix the image of tau_0
  const auto dd = signature_divisors(s, Signature{TwistedMonomial(Monomial{}, IncMap{1}), 0});
  CHECK_FALSE(dd.empty());
  for (const auto& t : dd) CHECK(twisted_mul(t, TwistedMonomial(Monomial{}, IncMap{1})) == s.tm);
}

TEST_CASE("cover test") {
  const auto R = testkit::ring_x();
  const auto& ord = R->order();
  const Polynomial f = parse_polynomial(R, "x[0] - 1");
  const std::vector<Monomial> leads = {f.lm()};
  const Signature s{TwistedMonomial(X(R, 1), {}), 0};
  CHECK_FALSE(is_covered(s, mul(X(R, 1), X(R, 0)), {}, {}, leads, ord));
  const std::vector<LabeledPoly> G = {{{{}, 0}, f}};
  // the element itself does not cover its own multiple
  CHECK_FALSE(is_covered(s, mul(X(R, 1), X(R, 0)), G, {}, leads, ord));
  // a strictly smaller multiplied lead covers
  const std::vector<LabeledPoly> G2 = {{{{}, 0}, parse_polynomial(R, "x[0]")}};
  CHECK_FALSE(is_covered(s, X(R, 1), G2, {}, {X(R, 0)}, ord));
  CHECK(is_covered(s, mul(X(R, 1), X(R, 0, 2)), G2, {}, {X(R, 0)}, ord));
  // a syzygy signature dividing exactly covers
  CHECK(is_covered(s, mul(X(R, 1), X(R, 0)), {}, {Signature{{}, 0}}, leads, ord));
  CHECK_FALSE(is_covered(s, mul(X(R, 1), X(R, 0)), {}, {Signature{{}, 1}}, leads, ord));
}

TEST_CASE("regular top reduction") {
  const auto R = testkit::ring_x();
  const auto& ord = R->order();
  const Polynomial f = parse_polynomial(R, "x[0] - 1");
  const std::vector<Monomial> leads = {f.lm(), X(R, 2)};
  const std::vector<LabeledPoly> G = {{{{}, 0}, f}};
  // irreducible: unchanged
  const LabeledPoly p{{{}, 1}, parse_polynomial(R, "7")};
  CHECK(regular_top_reduce(p, G, leads, ord).result.poly == p.poly);
  // shifted copy of f under a larger signature cancels
  const LabeledPoly q{{TwistedMonomial(Monomial{}, IncMap{}), 1}, parse_polynomial(R, "x[2] - 1")};
  const auto r = regular_top_reduce(q, G, leads, ord);
  CHECK(r.result.poly.is_zero());
  CHECK(r.result.sig == q.sig);
  CHECK_FALSE(r.singular);
  // equal multiplied signature only: singular
  const LabeledPoly same{{{}, 0}, f};
  CHECK(regular_top_reduce(same, G, leads, ord).singular);
}

TEST_CASE("principal syzygies") {
  const auto R = testkit::ring_x();
  CHECK(principal_syzygies({parse_polynomial(R, "x[0]")}).empty());
  CHECK(principal_syzygies({parse_polynomial(R, "x[0]"), parse_polynomial(R, "x[0] + 1")}).size() == 3);
  CHECK(principal_syzygies({parse_polynomial(R, "x[0]"), parse_polynomial(R, "x[1]")}, Action::trivial).size() == 1);
}

TEST_CASE("strong Buchberger") {
  const auto R = testkit::ring_x();
  auto run = strong_buchberger({parse_polynomial(R, "x[0]")});
  CHECK(run.G.size() == 1);
  CHECK(run.S.empty());
  run = strong_buchberger({parse_polynomial(R, "x[0]"), parse_polynomial(R, "x[1]")});
  REQUIRE(run.S.size() == 1);
  CHECK(run.S[0] == Signature{TwistedMonomial(X(R, 0), {}), 1});
  const auto gens = std::vector<Polynomial>{parse_polynomial(R, "x[1]^2 - x[0]"), parse_polynomial(R, "x[1]*x[0] - 1")};
  run = strong_buchberger(gens);
  CHECK(run.verified == true);
  CHECK(same_ideal(run.result.basis, classical_buchberger(gens), Action::trivial));
}

TEST_CASE("signature run on the toric input") {
  const auto p = testkit::load_problem("toric2x2.egb");
  const auto& R = p.ring;
  auto run = signature_completion(p.generators);
  REQUIRE(run.result.status == Status::complete);
  CHECK(run.verified == true);
  for (const char* s : {"x[1]*x[0] - y[1,0]", "y[3,2]*y[1,0] - y[3,1]*y[2,0]", "y[3,1]*y[2,0] - y[3,0]*y[2,1]"})
    CHECK(normal_form(parse_polynomial(R, s), run.result.basis).is_zero());
  CHECK(contains_up_to_scalar(run.result.basis, parse_polynomial(R, "x[1]*x[0] - y[1,0]")));
  CHECK(run.result.stats.zero_reductions > 0);
  CHECK(run.result.stats.covered_pairs > 0);
  const auto with_ps = signature_completion(p.generators, {}, {.principal_syzygies = true});
  CHECK(same_ideal(with_ps.result.basis, run.result.basis));
  const auto no_cover = signature_completion(p.generators, {}, {.disable_cover = true});
  CHECK(same_ideal(no_cover.result.basis, run.result.basis));
}
