#include "egb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace egb {

namespace {

void check_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.ring() != g.ring() && !(f.ring() && g.ring() && *f.ring() == *g.ring()))
    throw std::invalid_argument("polynomial operands belong to different rings");
}

// Merge two descending term lists: a + sign * b.
std::vector<Term> merge(const MonomialOrder& ord, const std::vector<Term>& a,
                        std::vector<Term> b_terms, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b_terms.size());
  auto i = a.begin();
  auto j = b_terms.begin();
  while (i != a.end() && j != b_terms.end()) {
    const auto c = ord.compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      if (negate_b) j->coef = -j->coef;
      out.push_back(std::move(*j++));
    } else {
      Coefficient s = negate_b ? Coefficient(i->coef - j->coef) : Coefficient(i->coef + j->coef);
      if (s != 0) out.push_back({std::move(s), i->mono});
      ++i, ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b_terms.end(); ++j) {
    if (negate_b) j->coef = -j->coef;
    out.push_back(std::move(*j));
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    t.coef.canonicalize();
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef += t.coef;
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(std::move(t));
    }
  }
  refresh_width();
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  p.refresh_width();
  return p;
}

void Polynomial::refresh_width() {
  width_ = 0;
  for (const auto& t : terms_) width_ = std::max(width_, t.mono.width());
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  return monomial(std::move(ring), c, Monomial{});
}

Polynomial Polynomial::monomial(RingPtr ring, const Coefficient& c, Monomial m) {
  std::vector<Term> t;
  if (c != 0) t.push_back({c, std::move(m)});
  return from_sorted(std::move(ring), std::move(t));
}

const Monomial& Polynomial::lm() const {
  if (terms_.empty()) throw std::domain_error("lead monomial of the zero polynomial");
  return terms_.front().mono;
}

const Coefficient& Polynomial::lc() const {
  if (terms_.empty()) throw std::domain_error("lead coefficient of the zero polynomial");
  return terms_.front().coef;
}

std::uint64_t Polynomial::lead_degree() const { return ring_->order().degree(lm()); }

Polynomial Polynomial::monic() const {
  if (is_zero() || lc() == 1) return *this;
  return scale(*this, Coefficient(1) / lc());
}

Polynomial add(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  return Polynomial::from_sorted(f.ring(), merge(f.ring()->order(), f.terms(), g.terms(), false));
}

Polynomial subtract(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  return Polynomial::from_sorted(f.ring(), merge(f.ring()->order(), f.terms(), g.terms(), true));
}

Polynomial scale(const Polynomial& f, const Coefficient& c) {
  if (c == 0) return Polynomial(f.ring());
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.coef *= c;
  return Polynomial::from_sorted(f.ring(), std::move(out));
}

Polynomial mul_term(const Polynomial& f, const Coefficient& c, const Monomial& m) {
  if (c == 0) return Polynomial(f.ring());
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coef * c, mul(t.mono, m)});
  return Polynomial::from_sorted(f.ring(), std::move(out));
}

Polynomial mul(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  Polynomial acc(f.ring());
  for (const auto& t : g.terms()) acc = add(acc, mul_term(f, t.coef, t.mono));
  return acc;
}

Polynomial act(const IncMap& rho, const Polynomial& f) {
  if (rho.is_identity()) return f;
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.coef, act(rho, t.mono)});
  return Polynomial::from_sorted(f.ring(), std::move(out));
}

Polynomial sub_scaled(const Polynomial& f, const Coefficient& c, const Monomial& m,
                      const IncMap& rho, const Polynomial& g) {
  check_same_ring(f, g);
  std::vector<Term> shifted;
  shifted.reserve(g.size());
  for (const auto& t : g.terms()) shifted.push_back({t.coef * c, mul(act(rho, t.mono), m)});
  return Polynomial::from_sorted(f.ring(),
                    merge(f.ring()->order(), f.terms(), std::move(shifted), true));
}

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool neg = t.coef < 0;
    const Coefficient mag = neg ? Coefficient(-t.coef) : t.coef;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (t.mono.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << ring.format(t.mono);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

// Width of act(rho, g) without building it.
Index shifted_width(const IncMap& rho, const Polynomial& g) {
  return g.width() == 0 ? 0 : rho(g.width() - 1) + 1;
}

struct Reducer {
  std::size_t index;
  IncMap witness;
};

std::optional<Reducer> find_reducer(const Monomial& m, const std::vector<Polynomial>& basis,
                                    const NormalFormOptions& opts) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& g = basis[k];
    if (g.is_zero()) continue;
    if (!opts.max_width) {
      if (auto w = pi_divides(g.lm(), m, opts.action)) return Reducer{k, std::move(*w)};
      continue;
    }
    for (auto& w : pi_div_witnesses(g.lm(), m, opts.action))
      if (shifted_width(w, g) <= *opts.max_width) return Reducer{k, std::move(w)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Polynomial> pi_reduce_step(const Polynomial& f, const Polynomial& g, Action action) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("pi_reduce_step: zero operand");
  auto w = pi_divides(g.lm(), f.lm(), action);
  if (!w) return std::nullopt;
  const Monomial q = quotient(f.lm(), act(*w, g.lm()));
  return sub_scaled(f, f.lc() / g.lc(), q, *w, g);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const NormalFormOptions& opts, ReductionTrace* trace) {
  std::vector<Term> done;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Monomial& lead = rest.lm();
    if (auto r = find_reducer(lead, basis, opts)) {
      const auto& g = basis[r->index];
      Monomial q = quotient(lead, act(r->witness, g.lm()));
      Coefficient ratio = rest.lc() / g.lc();
      rest = sub_scaled(rest, ratio, q, r->witness, g);
      if (trace) trace->steps.push_back({r->index, std::move(r->witness), std::move(q), std::move(ratio)});
      continue;
    }
    if (opts.top_only) {
      std::vector<Term> all = std::move(done);
      all.insert(all.end(), rest.terms().begin(), rest.terms().end());
      return Polynomial::from_sorted(f.ring(), std::move(all));
    }
    done.push_back(rest.terms().front());
    std::vector<Term> tail(rest.terms().begin() + 1, rest.terms().end());
    rest = Polynomial::from_sorted(f.ring(), std::move(tail));
  }
  return Polynomial::from_sorted(f.ring(), std::move(done));
}

Polynomial replay(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const ReductionTrace& trace) {
  Polynomial out = f;
  for (const auto& s : trace.steps)
    out = sub_scaled(out, s.ratio, s.cofactor, s.witness, basis.at(s.reducer));
  return out;
}

}  // namespace egb
