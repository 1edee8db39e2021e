#pragma once

#include "egb/polynomial.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace egb {

/// One side of an S-pair: cofactor * act(map, source polynomial).
struct SPairSide {
  Monomial cofactor;
  IncMap map;
  std::size_t source = 0;
};

/// A generator of the module of S-pairs of (f, g):
/// left.cofactor * act(left.map, lm f) == overlap == right.cofactor * act(right.map, lm g),
/// and overlap is the lcm of the two shifted lead monomials.
struct SPairGen {
  SPairSide left;
  SPairSide right;
  Monomial overlap;
};

/// Pairs of increasing maps {0..wf-1} -> {0..k-1} and {0..wg-1} -> {0..k-1}
/// whose images jointly cover {0..k-1}; k ranges over [max(wf,wg), wf+wg].
/// Every pair of increasing maps factors as rho composed with one of these.
std::vector<std::pair<IncMap, IncMap>> interlacings(std::size_t wf, std::size_t wg);

struct SPairOptions {
  /// Drop generators whose shifted lead monomials are coprime.
  bool coprime_filter = true;
  std::size_t left_id = 0;
  std::size_t right_id = 1;
};

/// One generator per interlacing of (width f, width g). When left_id ==
/// right_id the pair is a self-pair and the diagonal interlacing is skipped.
/// Throws std::domain_error on zero inputs.
std::vector<SPairGen> spair_generators(const Polynomial& f, const Polynomial& g,
                                       const SPairOptions& opts = {});

/// Same generators, computed from lead monomials and widths only.
std::vector<SPairGen> spair_generators(const Monomial& lm_f, Index width_f, const Monomial& lm_g,
                                       Index width_g, const SPairOptions& opts);

/// h1 - (lc h1 / lc h2) h2 with h1 = left side applied to f, h2 = right to g.
Polynomial s_polynomial(const SPairGen& gen, const Polynomial& f, const Polynomial& g);

/// Width of the larger of the two multiplied sides.
Index spair_width(const SPairGen& gen, const Polynomial& f, const Polynomial& g);

}  // namespace egb
