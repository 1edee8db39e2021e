#pragma once

#include "egb/engine.hpp"
#include "egb/spairs.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace egb {

/// mono * tau_{w_1} ... tau_{w_d}, an element of the twisted monoid in left
/// standard form. The word and its map are kept together.
class TwistedMonomial {
public:
  TwistedMonomial() = default;
  TwistedMonomial(Monomial mono, IncMap map)
      : mono_(std::move(mono)), map_(std::move(map)), word_(map_to_tau(map_)) {}
  static TwistedMonomial from_word(Monomial mono, std::span<const Index> word) {
    return {std::move(mono), tau_to_map(word)};
  }

  const Monomial& mono() const noexcept { return mono_; }
  const IncMap& map() const noexcept { return map_; }
  const TauWord& word() const noexcept { return word_; }
  bool is_unit() const noexcept { return mono_.is_one() && map_.is_identity(); }

  /// mono * act(map, m).
  Monomial apply(const Monomial& m) const { return mul(mono_, act(map_, m)); }

  friend bool operator==(const TwistedMonomial& a, const TwistedMonomial& b) {
    return a.map_ == b.map_ && a.mono_ == b.mono_;
  }

private:
  Monomial mono_;
  IncMap map_;
  TauWord word_;
};

/// (m, s)(n, t) = (m s(n), s t).
TwistedMonomial twisted_mul(const TwistedMonomial& a, const TwistedMonomial& b);

/// Total order used to break ties between equal Schreyer images: mono under
/// `ord`, then the word by length and then lexicographically.
std::strong_ordering twisted_compare(const TwistedMonomial& a, const TwistedMonomial& b,
                                     const MonomialOrder& ord);

/// Lead module term tm * e_index.
struct Signature {
  TwistedMonomial tm;
  std::size_t index = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// t * (tm e_i) = (t tm) e_i.
Signature operator*(const TwistedMonomial& t, const Signature& s);

/// Signature with polynomial; a zero polynomial marks a syzygy.
struct LabeledPoly {
  Signature sig;
  Polynomial poly;
};

/// Schreyer order: compares tm applied to leads[index], then the smaller
/// index is smaller, then twisted_compare.
std::strong_ordering schreyer_compare(const Signature& s, const Signature& t,
                                      const std::vector<Monomial>& leads, const MonomialOrder& ord);

/// The twisted monomials t with t * b == a (same index, b's map post-composed,
/// monomial quotient exact). The free part of t's map ranges over all
/// increasing fillings below the forced segment.
std::vector<TwistedMonomial> signature_divisors(const Signature& a, const Signature& b);

/// A J-pair: the larger side of an S-pair generator, kept symbolic until it is
/// processed. The polynomial is cofactor * act(map, G[source]).
struct JPair {
  Signature sig;
  Monomial lead;
  Index width = 0;
  std::size_t source = 0;
  Monomial cofactor;
  IncMap map;
};

/// J-pairs of (p, q) from every S-pair generator (coprime filter off). With
/// `action` trivial only the classical pair is formed. Equal signatures give
/// nothing.
std::vector<JPair> j_pairs(const LabeledPoly& p, std::size_t p_id, const LabeledPoly& q,
                           std::size_t q_id, const std::vector<Monomial>& leads,
                           const MonomialOrder& ord, Action action = Action::inc);

/// Whether (sig, lead) is redundant given the basis G and syzygies S: some
/// t * s_g equals sig exactly with t * lm(g) strictly smaller than lead, or
/// some syzygy signature left-divides sig.
bool is_covered(const Signature& sig, const Monomial& lead, const std::vector<LabeledPoly>& G,
                const std::vector<Signature>& S, const std::vector<Monomial>& leads,
                const MonomialOrder& ord, Action action = Action::inc);

struct TopReduction {
  LabeledPoly result;
  /// A reducer with an equal multiplied signature exists at the final lead.
  bool singular = false;
};

/// Subtracts orbit multiples of G whose multiplied signature is strictly
/// smaller than p.sig until the lead is no longer regularly reducible.
TopReduction regular_top_reduce(LabeledPoly p, const std::vector<LabeledPoly>& G,
                                const std::vector<Monomial>& leads, const MonomialOrder& ord,
                                Action action = Action::inc);

/// For generators F_i != F_j and each interlacing (s, s') of their widths,
/// the Schreyer-larger of lm(s' F_j) s e_i and lm(s F_i) s' e_j.
std::vector<Signature> principal_syzygies(const std::vector<Polynomial>& F,
                                          Action action = Action::inc);

struct SignatureOptions {
  Action action = Action::inc;
  bool principal_syzygies = false;
  /// Skip the cover test entirely (only stats should change).
  bool disable_cover = false;
  /// Run the is_egb check on the final basis.
  bool verify = true;
};

struct SignatureRun {
  std::vector<LabeledPoly> G;
  std::vector<Signature> S;
  /// Module generators F_0..F_{r-1}, including those added by rank growth.
  std::vector<Polynomial> F;
  EgbResult result;
  /// Result of is_egb on the returned basis when verification ran.
  std::optional<bool> verified;
};

/// Equivariant signature completion. Pairs are processed by smallest
/// signature, then overlap width; when the orbit normal form of a regularly
/// reduced element differs from it, the element enters as a new generator.
SignatureRun signature_completion(const std::vector<Polynomial>& F, const EngineLimits& limits = {},
                                  const SignatureOptions& opts = {});

/// signature_completion's basis as an EgbResult.
EgbResult egb_signature(const std::vector<Polynomial>& F, const EngineLimits& limits = {},
                        const SignatureOptions& opts = {});

/// Classical strong Buchberger: the signature loop with no index action.
SignatureRun strong_buchberger(const std::vector<Polynomial>& F, const EngineLimits& limits = {});

}  // namespace egb
