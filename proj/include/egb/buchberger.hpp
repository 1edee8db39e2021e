#pragma once

#include "egb/engine.hpp"
#include "egb/spairs.hpp"

#include <string>
#include <vector>

namespace egb {

struct BuchbergerOptions {
  bool coprime_filter = true;
};

/// Equivariant Buchberger completion. S-pairs are taken in ascending
/// (width, degree of overlap, creation order); inserted elements are fully
/// reduced and monic, and the final basis is autoreduced.
EgbResult egb_buchberger(const std::vector<Polynomial>& gens, const EngineLimits& limits = {},
                         const BuchbergerOptions& opts = {});

enum class IncrementalMode {
  /// Width queue when the order is a width order, truncation otherwise.
  automatic,
  /// Classical Groebner basis of each generator truncation, then the
  /// equivariant criterion.
  truncation,
  /// Completion level by level in width; requires a width order.
  width_queue,
};

struct IncrementalOptions {
  IncrementalMode mode = IncrementalMode::automatic;
  /// Truncation route: levels to add after the first one that passes the
  /// criterion, to look for two consecutive orbit-equal levels.
  Index confirm_levels = 0;
};

/// Truncated/incremental completion over levels n = w(F), w(F)+1, ...
/// Throws ConfigError for width_queue mode under a non-width order.
EgbResult egb_incremental(const std::vector<Polynomial>& gens, const EngineLimits& limits = {},
                          const IncrementalOptions& opts = {});

/// {act(rho, f) : f in gens, rho increasing {0..w(f)-1} -> {0..n-1}},
/// deduplicated, in generation order. Throws std::invalid_argument if n < w(gens).
std::vector<Polynomial> orbit_truncate(const std::vector<Polynomial>& gens, Index n);

/// Reduced Groebner basis of the ideal generated in the finite ring spanned by
/// the variables that occur (no index action), sorted by ascending lead.
/// Throws BudgetExhausted after `max_pairs` S-pair reductions.
std::vector<Polynomial> classical_buchberger(const std::vector<Polynomial>& gens,
                                             std::uint64_t max_pairs = 1000000);

/// Equivariant Buchberger criterion: every S-pair generator of every pair
/// reduces to zero modulo the orbits of `basis`.
bool is_egb(const std::vector<Polynomial>& basis);

/// Monic, mutually Pi-reduced elements generating the same invariant ideal,
/// sorted by (width, degree, lead monomial).
std::vector<Polynomial> autoreduce(const std::vector<Polynomial>& basis,
                                   Action action = Action::inc);

/// Sort key used for presenting bases.
void sort_for_output(std::vector<Polynomial>& basis);

/// Canonical representative of the Inc-orbit of f: indices compressed onto
/// an initial segment, monic.
Polynomial orbit_representative(const Polynomial& f);

/// Orbit-canonical text of a basis (order-insensitive), used for
/// stabilization tests.
std::vector<std::string> orbit_signature(const std::vector<Polynomial>& basis);

/// Every element of `a` reduces to zero modulo the orbits of `b`.
bool reduces_to_zero(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                     Action action = Action::inc);

/// reduces_to_zero both ways.
bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                Action action = Action::inc);

}  // namespace egb
