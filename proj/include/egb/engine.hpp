#pragma once

#include "egb/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace egb {

/// Resource caps for the completion loops. Exceeding one ends the run with
/// Status::budget_exhausted and whatever basis has been built so far.
struct EngineLimits {
  std::optional<Index> max_width = 16;
  std::optional<std::uint64_t> max_pairs = 100000;
  std::optional<std::size_t> max_basis;
};

enum class Status { complete, budget_exhausted };

const char* to_string(Status s);

struct EngineStats {
  std::uint64_t pairs_generated = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t coprime_skipped = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_insertions = 0;
  // Signature engine only.
  std::uint64_t covered_pairs = 0;
  std::uint64_t singular_discards = 0;
  std::uint64_t syzygies = 0;
  std::uint64_t principal_syzygies = 0;
  std::uint64_t rank = 0;
  std::uint64_t nf_changed = 0;
  // Truncation levels visited by the incremental engine.
  std::uint64_t levels = 0;
  std::optional<Index> final_level;
  std::optional<Index> stabilized_at;
  double wall_seconds = 0.0;
};

struct EgbResult {
  std::vector<Polynomial> basis;
  EngineStats stats;
  Status status = Status::complete;
  /// Which limit stopped the run, empty when complete.
  std::string budget_reason;
};

/// Raised by classical_buchberger when its pair budget runs out.
class BudgetExhausted : public std::runtime_error {
public:
  BudgetExhausted(const std::string& what, std::vector<Polynomial> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const std::vector<Polynomial>& partial() const noexcept { return partial_; }

private:
  std::vector<Polynomial> partial_;
};

/// Invalid engine configuration (e.g. width-queue mode under a non-width order).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace egb
