#pragma once

#include "egb/inc_monoid.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace egb {

inline constexpr std::size_t kMaxArity = 4;

enum class Constraint { none, strictly_decreasing, strictly_increasing, all_distinct };

const char* to_string(Constraint c);
std::optional<Constraint> constraint_from_string(const std::string& s);

/// One indexed variable family x_{i_1..i_k} of the ring.
struct FamilySpec {
  std::string name;
  unsigned arity = 1;
  Constraint constraint = Constraint::none;
  unsigned weight = 1;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

enum class OrderKind { lex, grlex };

const char* to_string(OrderKind k);

struct OrderSpec {
  OrderKind kind = OrderKind::lex;
  /// Family names, highest precedence first.
  std::vector<std::string> family_precedence;
  bool use_weights = false;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// A variable. `family` is the family's precedence rank in its ring (0 is the
/// highest), so variables compare without a ring at hand.
struct Variable {
  std::uint32_t family = 0;
  std::uint32_t arity = 1;
  std::array<Index, kMaxArity> index{};

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Positive if `a` is the larger variable: higher-precedence family first, then
/// index tuples compared lexicographically.
inline int compare_vars(const Variable& a, const Variable& b) noexcept {
  if (a.family != b.family) return a.family < b.family ? 1 : -1;
  for (std::size_t k = 0; k < kMaxArity; ++k) {
    if (a.index[k] != b.index[k]) return a.index[k] > b.index[k] ? 1 : -1;
  }
  return 0;
}

inline Index max_index(const Variable& v) noexcept {
  Index m = 0;
  for (std::uint32_t k = 0; k < v.arity; ++k) m = std::max(m, v.index[k]);
  return m;
}

bool satisfies(const Variable& v, Constraint c) noexcept;

struct Factor {
  Variable var;
  std::uint32_t exp = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Element of the free abelian monoid on the variables. Factors are stored
/// largest variable first with positive exponents; the empty monomial is 1.
class Monomial {
public:
  Monomial() = default;
  /// Accepts factors in any order; merges repeats and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(const Variable& v, std::uint32_t exp = 1) {
    return Monomial(std::vector<Factor>{{v, exp}});
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  /// 0 for the unit, otherwise one plus the largest index.
  Index width() const noexcept;
  /// Plain total degree (family weights ignored).
  std::uint64_t degree() const noexcept;

  /// Sorted distinct indices occurring in any variable.
  std::vector<Index> index_set() const;

  /// Exponent of v, 0 if absent.
  std::uint32_t exponent(const Variable& v) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  friend Monomial mul(const Monomial&, const Monomial&);
  friend Monomial act(const IncMap&, const Monomial&);
  struct Raw {};
  Monomial(Raw, std::vector<Factor> f) : factors_(std::move(f)) {}
  std::vector<Factor> factors_;
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
/// b / a; throws std::invalid_argument unless divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Replaces every index i by rho(i). Strictly increasing maps preserve the
/// variable order, so the result is already canonical.
Monomial act(const IncMap& rho, const Monomial& m);

/// How the monoid acts when searching for divisors: the full Inc(N) action,
/// or no action at all (ordinary divisibility in a finite polynomial ring).
enum class Action { inc, trivial };

/// A witness rho with act(rho, a) | b. The witness is the lexicographically
/// smallest image sequence on {0..width(a)-1}; gaps between occurring indices
/// are filled minimally.
std::optional<IncMap> pi_divides(const Monomial& a, const Monomial& b,
                                 Action action = Action::inc);

/// All witnesses (one per assignment of a's occurring indices into b's), in
/// lexicographic order.
std::vector<IncMap> pi_div_witnesses(const Monomial& a, const Monomial& b,
                                     Action action = Action::inc);

/// Monomial order over a fixed family precedence.
class MonomialOrder {
public:
  MonomialOrder() = default;
  /// `weights` indexed by family rank; used only for grlex with weights on.
  MonomialOrder(OrderKind kind, std::vector<unsigned> weights, bool use_weights)
      : kind_(kind), weights_(std::move(weights)), use_weights_(use_weights) {}

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Weighted degree when weights are on, plain degree otherwise.
  std::uint64_t degree(const Monomial& m) const;

  OrderKind kind() const noexcept { return kind_; }

private:
  OrderKind kind_ = OrderKind::lex;
  std::vector<unsigned> weights_;
  bool use_weights_ = false;
};

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Ring of the problem: families (stored by precedence rank) plus the order.
class Ring {
public:
  /// Throws std::invalid_argument on duplicate names, unknown or missing
  /// precedence entries, arity outside [1, kMaxArity] or zero weights.
  Ring(std::vector<FamilySpec> families, OrderSpec order);

  /// Families in declaration order.
  const std::vector<FamilySpec>& declared() const noexcept { return declared_; }
  /// Family with the given precedence rank.
  const FamilySpec& family(std::uint32_t rank) const { return by_rank_.at(rank); }
  std::size_t family_count() const noexcept { return by_rank_.size(); }
  std::optional<std::uint32_t> rank_of(const std::string& name) const;

  const OrderSpec& order_spec() const noexcept { return spec_; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Whether w(a) < w(b) implies a < b: lex over a single family whose first
  /// index is the largest one (arity one, or strictly decreasing tuples).
  bool is_width_order() const noexcept;

  /// Builds a variable and checks arity and constraint.
  /// Throws std::invalid_argument when they are violated.
  Variable variable(std::uint32_t rank, std::vector<Index> indices) const;

  std::string format(const Variable& v) const;
  std::string format(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.declared_ == b.declared_ && a.spec_ == b.spec_;
  }

private:
  std::vector<FamilySpec> declared_;
  std::vector<FamilySpec> by_rank_;
  OrderSpec spec_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace egb
