#pragma once

#include "egb/engine.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace egb {

enum class Algorithm { buchberger, incremental, signature };

const char* to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(const std::string& s);

struct ProblemOptions {
  Algorithm algorithm = Algorithm::buchberger;
  EngineLimits limits;
  bool principal_syzygies = false;
  /// Incremental truncation route only; see IncrementalOptions.
  Index confirm_levels = 0;
  friend bool operator==(const ProblemOptions& a, const ProblemOptions& b) {
    return a.algorithm == b.algorithm && a.limits.max_width == b.limits.max_width &&
           a.limits.max_pairs == b.limits.max_pairs && a.limits.max_basis == b.limits.max_basis &&
           a.principal_syzygies == b.principal_syzygies && a.confirm_levels == b.confirm_levels;
  }
};

struct Problem {
  RingPtr ring;
  std::vector<Polynomial> generators;
  ProblemOptions options;
};

bool operator==(const Problem& a, const Problem& b);

/// Syntax or semantic error in problem text; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The bare message without the location prefix.
  const std::string& message() const noexcept { return msg_; }

private:
  std::string msg_;
  std::size_t line_;
  std::size_t column_;
};

/// Reads a problem file:
///
///   ring {
///     field = QQ;
///     family x { arity = 1, constraint = none, weight = 1 }
///     order = lex;          # or grlex
///     precedence = x;       # optional, highest first
///     weights = false;
///   }
///   generators { x[0]*x[1] - x[1]*x[2]^2 + x[1]^2; }
///   options { algorithm = buchberger; max_width = 16; max_pairs = 100000; }
///
/// Throws ParseError.
Problem parse_problem(const std::string& text);

/// A single expression over `ring`. Throws ParseError.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Canonical problem text; parse_problem(serialize(p)) == p.
std::string serialize(const Problem& p);

/// One polynomial per line (monic), sorted by (width, degree, lead).
std::string serialize_basis(const std::vector<Polynomial>& basis);

struct SolveOutcome {
  EgbResult result;
  /// is_egb on the final basis when the engine checked it.
  std::optional<bool> verified;
};

/// Runs the configured algorithm.
SolveOutcome solve(const Problem& p);

/// Versioned JSON run report with sorted keys. Timing is included only on
/// request so that reports stay byte-identical across runs.
std::string report_json(const Problem& p, const SolveOutcome& outcome, bool include_timing = false);

}  // namespace egb
