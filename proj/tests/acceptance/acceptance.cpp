// Acceptance run: one PASS/FAIL line per criterion.

#include "egb/buchberger.hpp"
#include "egb/signature.hpp"
#include "support/testkit.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace egb;

namespace {

// Runtime ceilings in seconds.
constexpr double kToricSeconds = 60;
constexpr double kMembershipSeconds = 10;
constexpr double kSignatureSeconds = 300;
constexpr double kFibonacciSeconds = 5;
constexpr double kAgreementSeconds = 600;
constexpr double kPropertySeconds = 120;

constexpr std::size_t kOrderTriples = 10000;
constexpr std::size_t kNormalForms = 1000;
constexpr std::size_t kIncMonoidCases = 1000;

struct Cli {
  int status = -1;
  std::string out;
};

Cli run_cli(const std::string& args) {
  Cli r;
  const std::string cmd = std::string(EGB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

std::vector<Polynomial> parse_lines(const RingPtr& ring, const std::string& text) {
  std::vector<Polynomial> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(parse_polynomial(ring, line));
  return out;
}

bool contains_monic(const std::vector<Polynomial>& basis, const Polynomial& p) {
  const Polynomial m = p.monic();
  for (const auto& g : basis)
    if (g.monic() == m) return true;
  return false;
}

/// Lead term of p plus the normal form of its tail.
Polynomial tail_reduced(const Polynomial& p, const std::vector<Polynomial>& basis) {
  const Polynomial lead = Polynomial::monomial(p.ring(), p.lc(), p.lm());
  return lead + normal_form(p - lead, basis);
}

struct Verdict {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, bool hard, double limit, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs > limit) {
    v.ok = false;
    v.detail += "; over the time limit";
  }
  if (!v.ok && hard) ++failures;
  char timing[64];
  if (limit > 0)
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, limit);
  else
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::printf("%s [%d] %s%s (%s): %s\n", v.ok ? "PASS" : "FAIL", id, name, hard ? "" : " [optional]", timing,
              v.detail.c_str());
  std::fflush(stdout);
}

Verdict check_toric() {
  const Problem p = testkit::load_problem("toric2x2.egb");
  const auto cli = run_cli("solve " + testkit::data_path("toric2x2.egb"));
  const auto from_cli = parse_lines(p.ring, cli.out);
  const auto listed = polys(p.ring, {"x[0]*x[1] - y[1,0]", "x[2]*y[1,0] - x[1]*y[2,0]", "x[2]*y[1,0] - x[0]*y[2,1]",
                                    "x[1]*y[2,0] - x[0]*y[2,1]", "x[0]^2*y[2,1] - y[2,0]*y[1,0]",
                                    "y[3,2]*y[1,0] - y[3,0]*y[2,1]", "y[3,1]*y[2,0] - y[3,0]*y[2,1]"});
  const auto lib = solve(p);
  Verdict v;
  v.ok = cli.status == 0 && lib.result.status == Status::complete && same_ideal(from_cli, listed) &&
         same_ideal(lib.result.basis, listed) && is_egb(lib.result.basis);
  std::size_t literal = 0;
  for (const auto& q : listed) literal += contains_monic(from_cli, q);
  v.detail = "exit " + std::to_string(cli.status) + ", " + std::to_string(from_cli.size()) +
             " elements, ideal-equal to the 7 listed; " + std::to_string(literal) + " of 7 appear verbatim";
  return v;
}

Verdict check_membership() {
  const Problem p = testkit::load_problem("membership.egb");
  const auto o4 = polys(p.ring, {"x[1]^2*x[0] - 2*x[1]^2 + x[1]*x[0]^2 - 2*x[1]*x[0]", "x[1]^3 - x[1]*x[0]^2",
                                 "x[2]*x[0]^2 - x[1]^2 - x[1]*x[0]", "x[2]*x[1] - x[2]*x[0]",
                                 "x[2]^2 + x[2]*x[0] - x[1]^2 - x[1]*x[0]"});
  const std::string h =
      "x[0]*x[4]^2 + x[0]*x[1]^2 + x[1]*x[0]^2 - 2*x[1]*x[0] + x[0]*x[3]*x[4] - x[0]*x[5]^2 - x[0]*x[3]*x[5] - "
      "2*x[1]^2";
  const auto lib = solve(p);
  const auto cli = run_cli("reduce " + testkit::data_path("membership.egb") + " --poly '" + h + "'");
  Verdict v;
  v.ok = lib.result.status == Status::complete && lib.result.basis.size() == 5 && same_ideal(lib.result.basis, o4) &&
         cli.status == 0 && cli.out == "0\n";
  v.detail = std::to_string(lib.result.basis.size()) + " elements, reduce prints '" +
             cli.out.substr(0, cli.out.find('\n')) + "'";
  return v;
}

Verdict check_signature() {
  const Problem p = testkit::load_problem("signature_toric.egb");
  const auto out = solve(p);
  const auto& B = out.result.basis;
  const auto listed = polys(p.ring, {"x[1]*x[0] - y[1,0]", "y[3,2]*y[1,0] - y[3,1]*y[2,0]",
                                     "y[3,1]*y[2,0] - y[3,0]*y[2,1]"});
  std::size_t literal = 0, reduced = 0;
  for (const auto& q : listed) {
    literal += contains_monic(B, q);
    reduced += contains_monic(B, tail_reduced(q, B));
  }
  const auto& s = out.result.stats;
  Verdict v;
  v.ok = out.result.status == Status::complete && out.verified.value_or(false) && reduced == listed.size() &&
         reduces_to_zero(listed, B);
  v.detail = std::to_string(B.size()) + " elements, " + std::to_string(reduced) +
             " of 3 present after tail reduction, " + std::to_string(literal) + " of 3 verbatim; " +
             std::to_string(s.zero_reductions) + " zero reductions, " + std::to_string(s.covered_pairs) +
             " covered pairs";
  return v;
}

Verdict check_fibonacci() {
  const Problem p = testkit::load_problem("fibonacci.egb");
  const auto G = classical_buchberger(p.generators);
  // Reduced lex basis from an independent CAS run, frozen.
  const auto oracle = polys(p.ring, {"z[0] - x[0] - y[0]",
                                     "x[0]^4 + 2/3*t[0]*x[0] - 1/3*x[0]*y[0]^3 - t[0]*y[0] + 3*y[0]^4 - 1",
                                     "x[0]^2*y[0] + x[0]*y[0]^2 + 2/3*y[0]^3 - 1/3*t[0]",
                                     "t[0]*x[0]^2 + t[0]*x[0]*y[0] - 8/3*t[0]*y[0]^2 + 25/3*y[0]^5 - 3*y[0]",
                                     "y[0]^6 - 2/5*t[0]*y[0]^3 + 1/25*t[0]^2 - 9/25*y[0]^2"});
  const auto sextic = parse_polynomial(p.ring, "25*y[0]^6 - 10*y[0]^3*t[0] - 9*y[0]^2 + t[0]^2");
  bool same = G.size() == oracle.size();
  for (const auto& q : oracle) same = same && contains_monic(G, q);
  Verdict v;
  v.ok = same && contains_monic(G, sextic);
  v.detail = std::to_string(G.size()) + " elements, " + (same ? "equal to" : "differs from") +
             " the frozen reduced basis, sextic " + (contains_monic(G, sextic) ? "present" : "missing");
  return v;
}

Verdict check_agreement() {
  const std::vector<std::string> inputs = {"toric2x2.egb",   "membership.egb", "signature_toric.egb",
                                           "random_a.egb",   "random_b.egb",   "grlex_mixed.egb"};
  Verdict v{true, ""};
  for (const auto& name : inputs) {
    const Problem p = testkit::load_problem(name);
    const auto a = egb_buchberger(p.generators, p.options.limits);
    const auto b = egb_incremental(p.generators, p.options.limits);
    const auto c = egb_signature(p.generators, p.options.limits);
    const bool done = a.status == Status::complete && b.status == Status::complete && c.status == Status::complete;
    const bool agree = same_ideal(a.basis, b.basis) && same_ideal(a.basis, c.basis) &&
                       same_ideal(b.basis, c.basis) && reduces_to_zero(p.generators, a.basis);
    if (!done || !agree) v.ok = false;
    v.detail += (v.detail.empty() ? "" : ", ") + name + " " + std::to_string(a.basis.size()) + "/" +
                std::to_string(b.basis.size()) + "/" + std::to_string(c.basis.size()) +
                (done && agree ? "" : " MISMATCH");
  }
  return v;
}

Verdict check_properties() {
  const auto inc = testkit::inc_monoid_suite(kIncMonoidCases * 5);
  const auto ord = testkit::order_suite(kOrderTriples * 2);
  const auto pid = testkit::pi_divides_suite(5000);
  const auto nf = testkit::normal_form_suite(kNormalForms * 2);
  Verdict v;
  v.ok = inc.ok() && ord.ok() && pid.ok() && nf.ok() && ord.cases >= kOrderTriples && nf.cases >= kNormalForms &&
         inc.cases >= kIncMonoidCases;
  v.detail = std::to_string(ord.cases) + " order triples, " + std::to_string(pid.cases) + " divisibility pairs, " +
             std::to_string(nf.cases) + " normal forms, " + std::to_string(inc.cases) + " monoid cases";
  for (const auto* r : {&inc, &ord, &pid, &nf})
    if (!r->ok()) v.detail += "; " + r->failure;
  return v;
}

Verdict check_stabilization() {
  const Problem p = testkit::load_problem("square_map.egb");
  const auto out = solve(p);
  const auto& s = out.result.stats;
  Verdict v;
  const bool graceful = out.result.status == Status::complete || !out.result.basis.empty();
  v.ok = graceful && s.stabilized_at.has_value();
  v.detail = std::string(to_string(out.result.status)) + ", " + std::to_string(out.result.basis.size()) +
             " elements, " + std::to_string(s.levels) + " levels";
  if (!out.result.budget_reason.empty()) v.detail += ", stopped by " + out.result.budget_reason;
  v.detail += s.stabilized_at ? ", stabilized at level " + std::to_string(*s.stabilized_at) : ", no stabilization";
  return v;
}

}  // namespace

int main() {
  report(1, "toric 2x2 kernel", true, kToricSeconds, check_toric);
  report(2, "membership", true, kMembershipSeconds, check_membership);
  report(3, "signature run", true, kSignatureSeconds, check_signature);
  report(4, "classical engine on the Fibonacci system", true, kFibonacciSeconds, check_fibonacci);
  report(5, "cross-algorithm agreement", true, kAgreementSeconds, check_agreement);
  report(6, "property suites", true, kPropertySeconds, check_properties);
  report(7, "monomial-map kernel stabilization", false, 0, check_stabilization);
  return failures == 0 ? 0 : 1;
}
