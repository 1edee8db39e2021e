#pragma once

#include "egb/monomial.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace egb {

using Coefficient = mpq_class;

struct Term {
  Coefficient coef;
  Monomial mono;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coef == b.coef; }
};

/// Exact-rational polynomial over a Ring. Terms are nonzero and strictly
/// descending in the ring's order.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts and combines terms; zero coefficients are dropped.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial monomial(RingPtr ring, const Coefficient& c, Monomial m);
  /// Wraps terms that are already canonical (nonzero, strictly descending).
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Lead monomial and coefficient; throw std::domain_error on zero.
  const Monomial& lm() const;
  const Coefficient& lc() const;

  Index width() const noexcept { return width_; }
  /// Degree of the lead monomial under the ring's grading.
  std::uint64_t lead_degree() const;

  /// Copy scaled so the lead coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

private:
  void refresh_width();

  RingPtr ring_;
  std::vector<Term> terms_;
  Index width_ = 0;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial subtract(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Polynomial& f, const Coefficient& c);
/// c * m * f.
Polynomial mul_term(const Polynomial& f, const Coefficient& c, const Monomial& m);
Polynomial mul(const Polynomial& f, const Polynomial& g);
/// f - c * m * act(rho, g), computed in one merge.
Polynomial sub_scaled(const Polynomial& f, const Coefficient& c, const Monomial& m,
                      const IncMap& rho, const Polynomial& g);
Polynomial act(const IncMap& rho, const Polynomial& f);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return subtract(f, g); }

std::string format(const Polynomial& f);

/// One reduction f <- f - ratio * cofactor * act(witness, G[reducer]).
struct ReductionStep {
  std::size_t reducer = 0;
  IncMap witness;
  Monomial cofactor;
  Coefficient ratio;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct NormalFormOptions {
  Action action = Action::inc;
  /// Only reduce the lead term (top reduction).
  bool top_only = false;
  /// Reject reductions whose shifted reducer would exceed this width.
  std::optional<Index> max_width;
};

/// When some witness makes lm(g) divide lm(f), returns
/// f - (lc f / lc g) * q * act(rho, g) for the first witness; otherwise nothing.
/// Throws std::domain_error on zero inputs.
std::optional<Polynomial> pi_reduce_step(const Polynomial& f, const Polynomial& g,
                                         Action action = Action::inc);

/// Full (lead and tail) reduction of f by the orbits of `basis`. Reducers are
/// tried in order, the first admitting a witness wins, and the witness is the
/// lexicographically smallest one.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const NormalFormOptions& opts = {}, ReductionTrace* trace = nullptr);

/// Re-applies a trace to f. Throws std::out_of_range for bad reducer ids.
Polynomial replay(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const ReductionTrace& trace);

}  // namespace egb
