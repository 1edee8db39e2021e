// Command line front end: egb solve|reduce|member|orbit|check FILE ...

#include "egb/buchberger.hpp"
#include "egb/problem_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { ok = 0, negative = 1, usage = 2, budget = 3 };

egb::Problem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return egb::parse_problem(ss.str());
  } catch (const egb::ParseError& e) {
    throw std::runtime_error(path + ":" + e.what());
  }
}

egb::Polynomial load_poly(const egb::Problem& p, const std::string& text) {
  try {
    return egb::parse_polynomial(p.ring, text);
  } catch (const egb::ParseError& e) {
    throw std::runtime_error("--poly:" + std::to_string(e.column()) + ": " + e.message());
  }
}

struct Overrides {
  std::string algorithm;
  std::optional<unsigned> max_width;
  std::optional<std::uint64_t> max_pairs;
  bool principal_syzygies = false;

  void apply(egb::Problem& p) const {
    if (!algorithm.empty()) p.options.algorithm = *egb::algorithm_from_string(algorithm);
    if (max_width) p.options.limits.max_width = *max_width;
    if (max_pairs) p.options.limits.max_pairs = *max_pairs;
    if (principal_syzygies) p.options.principal_syzygies = true;
  }
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--algorithm", o.algorithm, "Completion algorithm")
      ->check(CLI::IsMember({"buchberger", "incremental", "signature"}));
  cmd->add_option("--max-width", o.max_width, "Largest S-pair width to process");
  cmd->add_option("--max-pairs", o.max_pairs, "Pair budget");
  cmd->add_flag("--principal-syzygies", o.principal_syzygies, "Seed the signature run with principal syzygies");
}

int run_solve(const std::string& file, const Overrides& ov, const std::string& report, bool json,
              bool timing) {
  egb::Problem p = load(file);
  ov.apply(p);
  const auto outcome = egb::solve(p);
  const std::string text = egb::report_json(p, outcome, timing);
  if (!report.empty()) {
    std::ofstream out(report);
    if (!out) throw std::runtime_error("cannot write " + report);
    out << text;
  }
  if (json)
    std::cout << text;
  else
    std::cout << egb::serialize_basis(outcome.result.basis);
  if (outcome.result.status == egb::Status::budget_exhausted) {
    std::cerr << "egb: budget exhausted (" << outcome.result.budget_reason << "), basis is partial\n";
    return budget;
  }
  return ok;
}

int run_reduce(const std::string& file, const Overrides& ov, const std::string& poly, bool member) {
  egb::Problem p = load(file);
  ov.apply(p);
  const egb::Polynomial h = load_poly(p, poly);
  const auto outcome = egb::solve(p);
  const egb::Polynomial r = egb::normal_form(h, outcome.result.basis);
  const bool partial = outcome.result.status == egb::Status::budget_exhausted;
  if (partial) std::cerr << "egb: budget exhausted (" << outcome.result.budget_reason << "), basis is partial\n";
  if (!member) {
    std::cout << egb::format(r) << "\n";
    return partial ? budget : ok;
  }
  if (r.is_zero()) {
    std::cout << "member\n";
    return ok;
  }
  if (partial) return budget;
  std::cout << "not a member\n";
  return negative;
}

int run_orbit(const std::string& file, unsigned width) {
  const egb::Problem p = load(file);
  for (const auto& g : egb::orbit_truncate(p.generators, width)) std::cout << egb::format(g) << "\n";
  return ok;
}

int run_check(const std::string& file) {
  const egb::Problem p = load(file);
  const bool yes = egb::is_egb(p.generators);
  std::cout << (yes ? "equivariant Groebner basis" : "not an equivariant Groebner basis") << "\n";
  return yes ? ok : negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Groebner bases over Inc(N)-invariant ideals"};
  app.require_subcommand(1);

  std::string file, report, poly;
  bool json = false, timing = false;
  unsigned width = 0;
  Overrides ov;

  auto* solve = app.add_subcommand("solve", "Compute an equivariant Groebner basis");
  solve->add_option("FILE", file, "Problem file")->required();
  add_overrides(solve, ov);
  solve->add_option("--report", report, "Write the JSON report to this file");
  solve->add_flag("--json", json, "Print the JSON report instead of the basis");
  solve->add_flag("--timing", timing, "Include wall time in the report");

  auto* reduce = app.add_subcommand("reduce", "Normal form of a polynomial modulo the basis");
  reduce->add_option("FILE", file, "Problem file")->required();
  reduce->add_option("--poly", poly, "Polynomial expression")->required();
  add_overrides(reduce, ov);

  auto* member = app.add_subcommand("member", "Ideal membership (exit 0 yes, 1 no)");
  member->add_option("FILE", file, "Problem file")->required();
  member->add_option("--poly", poly, "Polynomial expression")->required();
  add_overrides(member, ov);

  auto* orbit = app.add_subcommand("orbit", "Generators shifted into the first N indices");
  orbit->add_option("FILE", file, "Problem file")->required();
  orbit->add_option("--width", width, "Truncation width N")->required();

  auto* check = app.add_subcommand("check", "Test whether the generators form an equivariant Groebner basis");
  check->add_option("FILE", file, "Problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*solve) return run_solve(file, ov, report, json, timing);
    if (*reduce) return run_reduce(file, ov, poly, false);
    if (*member) return run_reduce(file, ov, poly, true);
    if (*orbit) return run_orbit(file, width);
    if (*check) return run_check(file);
  } catch (const std::exception& e) {
    std::cerr << "egb: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
