#include "egb/signature.hpp"

#include "egb/buchberger.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace egb {

TwistedMonomial twisted_mul(const TwistedMonomial& a, const TwistedMonomial& b) {
  return {mul(a.mono(), act(a.map(), b.mono())), compose(a.map(), b.map())};
}

std::strong_ordering twisted_compare(const TwistedMonomial& a, const TwistedMonomial& b,
                                     const MonomialOrder& ord) {
  if (auto c = ord.compare(a.mono(), b.mono()); c != 0) return c;
  if (a.word().size() != b.word().size()) return a.word().size() <=> b.word().size();
  return a.word() <=> b.word();
}

Signature operator*(const TwistedMonomial& t, const Signature& s) {
  return {twisted_mul(t, s.tm), s.index};
}

std::strong_ordering schreyer_compare(const Signature& s, const Signature& t,
                                      const std::vector<Monomial>& leads, const MonomialOrder& ord) {
  if (auto c = ord.compare(s.tm.apply(leads.at(s.index)), t.tm.apply(leads.at(t.index))); c != 0)
    return c;
  if (s.index != t.index) return s.index <=> t.index;
  return twisted_compare(s.tm, t.tm, ord);
}

namespace {

constexpr std::size_t kMaxDivisors = 4096;

// All increasing rho with rho o sigma == target.
std::vector<IncMap> left_factors(const IncMap& sigma, const IncMap& target) {
  const Index K = static_cast<Index>(std::max(sigma.domain_size(), target.domain_size()));
  const Index T = sigma(K) + 1;
  // forced[x] holds rho(x) for x in the image of sigma below T.
  std::vector<std::optional<Index>> forced(T);
  for (Index k = 0; k <= K; ++k) forced[sigma(k)] = target(k);
  // Feasibility: room for the free positions between forced ones.
  Index prev_pos = 0, prev_val = 0;
  bool have_prev = false;
  for (Index x = 0; x < T; ++x) {
    if (!forced[x]) continue;
    const Index need = have_prev ? *forced[x] - prev_val : *forced[x] + 1;
    const Index gap = have_prev ? x - prev_pos : x + 1;
    if (have_prev ? *forced[x] <= prev_val || need < gap : *forced[x] < x) return {};
    prev_pos = x;
    prev_val = *forced[x];
    have_prev = true;
  }
  std::vector<IncMap> out;
  std::vector<Index> vals(T);
  // next_forced[x]: position of the first forced entry at or after x.
  std::vector<Index> next_forced(T + 1, T);
  for (Index x = T; x-- > 0;) next_forced[x] = forced[x] ? x : next_forced[x + 1];
  auto dfs = [&](auto&& self, Index x) -> void {
    if (out.size() >= kMaxDivisors) return;
    if (x == T) {
      out.emplace_back(vals);
      return;
    }
    const Index lo = x == 0 ? 0 : vals[x - 1] + 1;
    if (forced[x]) {
      if (*forced[x] < lo) return;
      vals[x] = *forced[x];
      self(self, x + 1);
      return;
    }
    const Index nf = next_forced[x];
    const Index hi = *forced[nf] - (nf - x);
    for (Index v = lo; v <= hi; ++v) {
      vals[x] = v;
      self(self, x + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace

std::vector<TwistedMonomial> signature_divisors(const Signature& a, const Signature& b) {
  std::vector<TwistedMonomial> out;
  if (a.index != b.index) return out;
  for (auto& rho : left_factors(b.tm.map(), a.tm.map())) {
    Monomial shifted = act(rho, b.tm.mono());
    if (!divides(shifted, a.tm.mono())) continue;
    out.emplace_back(quotient(a.tm.mono(), shifted), std::move(rho));
  }
  return out;
}

namespace {

Index side_width(const Monomial& cofactor, const IncMap& map, Index w) {
  return std::max(cofactor.width(), w == 0 ? Index{0} : map(w - 1) + 1);
}

}  // namespace

std::vector<JPair> j_pairs(const LabeledPoly& p, std::size_t p_id, const LabeledPoly& q,
                           std::size_t q_id, const std::vector<Monomial>& leads,
                           const MonomialOrder& ord, Action action) {
  std::vector<SPairGen> gens;
  if (action == Action::inc) {
    gens = spair_generators(p.poly, q.poly, {false, p_id, q_id});
  } else if (p_id != q_id) {
    Monomial m = lcm(p.poly.lm(), q.poly.lm());
    gens.push_back({{quotient(m, p.poly.lm()), {}, p_id}, {quotient(m, q.poly.lm()), {}, q_id}, m});
  }
  std::vector<JPair> out;
  for (auto& gen : gens) {
    Signature sl = TwistedMonomial(gen.left.cofactor, gen.left.map) * p.sig;
    Signature sr = TwistedMonomial(gen.right.cofactor, gen.right.map) * q.sig;
    const auto c = schreyer_compare(sl, sr, leads, ord);
    if (c == 0) continue;
    if (c > 0) {
      out.push_back({std::move(sl), gen.overlap, side_width(gen.left.cofactor, gen.left.map, p.poly.width()),
                     p_id, gen.left.cofactor, gen.left.map});
    } else {
      out.push_back({std::move(sr), gen.overlap, side_width(gen.right.cofactor, gen.right.map, q.poly.width()),
                     q_id, gen.right.cofactor, gen.right.map});
    }
  }
  return out;
}

bool is_covered(const Signature& sig, const Monomial& lead, const std::vector<LabeledPoly>& G,
                const std::vector<Signature>& S, const std::vector<Monomial>& leads,
                const MonomialOrder& ord, Action action) {
  (void)leads;
  (void)action;
  for (const auto& s : S)
    if (!signature_divisors(sig, s).empty()) return true;
  for (const auto& g : G) {
    if (g.sig.index != sig.index) continue;
    for (const auto& t : signature_divisors(sig, g.sig)) {
      if (g.poly.is_zero() || ord.less(t.apply(g.poly.lm()), lead)) return true;
    }
  }
  return false;
}

namespace {

// Increasing maps on {0..w-1} that agree with `witness` on `fixed` and stay
// below `bound`. Different fillings of the free positions give the same
// shifted lead but different multiplied signatures.
std::vector<IncMap> witness_extensions(const IncMap& witness, const std::vector<Index>& fixed, Index w,
                                       Index bound) {
  std::vector<IncMap> out;
  std::vector<std::optional<Index>> pinned(w);
  for (Index i : fixed) pinned[i] = witness(i);
  std::vector<Index> vals(w);
  auto dfs = [&](auto&& self, Index x) -> void {
    if (out.size() >= kMaxDivisors) return;
    if (x == w) {
      out.emplace_back(vals);
      return;
    }
    const Index lo = x == 0 ? 0 : vals[x - 1] + 1;
    if (pinned[x]) {
      if (*pinned[x] < lo) return;
      vals[x] = *pinned[x];
      self(self, x + 1);
      return;
    }
    // Leave room for the positions up to the next pinned one.
    Index hi = bound - (w - x);
    for (Index y = x + 1; y < w; ++y) {
      if (pinned[y]) {
        hi = std::min(hi, *pinned[y] - (y - x));
        break;
      }
    }
    if (bound < w - x) return;
    for (Index v = lo; v <= hi; ++v) {
      vals[x] = v;
      self(self, x + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace

TopReduction regular_top_reduce(LabeledPoly p, const std::vector<LabeledPoly>& G,
                                const std::vector<Monomial>& leads, const MonomialOrder& ord,
                                Action action) {
  bool singular = false;
  while (!p.poly.is_zero()) {
    singular = false;
    bool reduced = false;
    const Monomial lead = p.poly.lm();
    const Index bound = std::max(p.poly.width(), p.sig.tm.apply(leads.at(p.sig.index)).width());
    for (const auto& g : G) {
      if (g.poly.is_zero()) continue;
      const auto fixed = g.poly.lm().index_set();
      for (const auto& w : pi_div_witnesses(g.poly.lm(), lead, action)) {
        const Monomial c = quotient(lead, act(w, g.poly.lm()));
        const Index wg = g.poly.width();
        std::vector<IncMap> rhos;
        if (action == Action::inc)
          rhos = witness_extensions(w, fixed, wg, std::max(bound, wg == 0 ? Index{0} : w(wg - 1) + 1));
        else
          rhos.push_back(w);
        for (const auto& rho : rhos) {
          const auto cmp = schreyer_compare(TwistedMonomial(c, rho) * g.sig, p.sig, leads, ord);
          if (cmp == 0) singular = true;
          if (cmp >= 0) continue;
          p.poly = sub_scaled(p.poly, p.poly.lc() / g.poly.lc(), c, rho, g.poly);
          reduced = true;
          break;
        }
        if (reduced) break;
      }
      if (reduced) break;
    }
    if (!reduced) break;
  }
  const bool flag = singular && !p.poly.is_zero();
  return {std::move(p), flag};
}

std::vector<Signature> principal_syzygies(const std::vector<Polynomial>& F, Action action) {
  std::vector<Signature> out;
  std::vector<Monomial> leads;
  for (const auto& f : F) {
    if (f.is_zero()) throw std::domain_error("principal_syzygies: zero generator");
    leads.push_back(f.lm());
  }
  const auto& ord = F.empty() ? MonomialOrder{} : F.front().ring()->order();
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      std::vector<std::pair<IncMap, IncMap>> pairs;
      if (action == Action::inc)
        pairs = interlacings(F[i].width(), F[j].width());
      else
        pairs.emplace_back();
      for (const auto& [s, sp] : pairs) {
        Signature a{TwistedMonomial(act(sp, leads[j]), s), i};
        Signature b{TwistedMonomial(act(s, leads[i]), sp), j};
        out.push_back(schreyer_compare(a, b, leads, ord) > 0 ? std::move(a) : std::move(b));
      }
    }
  }
  return out;
}

namespace {

constexpr std::size_t kFromGenerator = std::numeric_limits<std::size_t>::max();

class SignatureEngine {
public:
  SignatureEngine(const EngineLimits& limits, const SignatureOptions& opts)
      : limits_(limits), opts_(opts) {}

  SignatureRun run(const std::vector<Polynomial>& input) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& f : input) {
      if (f.is_zero()) continue;
      if (!ord_) ord_ = &f.ring()->order();
      add_generator(f.monic());
    }
    if (!ord_) return std::move(out_);
    if (opts_.principal_syzygies) {
      auto ps = principal_syzygies(out_.F, opts_.action);
      out_.result.stats.principal_syzygies = ps.size();
      for (auto& s : ps) out_.S.push_back(std::move(s));
    }
    loop();
    auto& res = out_.result;
    res.stats.rank = out_.F.size();
    if (deferred_ > 0 && res.status == Status::complete) {
      res.status = Status::budget_exhausted;
      res.budget_reason = "max_width";
    }
    std::vector<Polynomial> basis;
    for (const auto& g : out_.G) basis.push_back(g.poly);
    res.basis = autoreduce(basis, opts_.action);
    if (opts_.verify && res.status == Status::complete) {
      if (opts_.action == Action::inc)
        out_.verified = is_egb(res.basis);
      else
        out_.verified = classical_is_gb(res.basis);
    }
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::move(out_);
  }

private:
  struct Queued {
    JPair pair;
    std::uint64_t seq;
  };

  static bool classical_is_gb(const std::vector<Polynomial>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const auto& f = basis[i];
        const auto& g = basis[j];
        Monomial m = lcm(f.lm(), g.lm());
        Polynomial s = subtract(mul_term(f, Coefficient(1), quotient(m, f.lm())),
                                mul_term(g, f.lc() / g.lc(), quotient(m, g.lm())));
        if (!normal_form(s, basis, {.action = Action::trivial}).is_zero()) return false;
      }
    }
    return true;
  }

  bool later(const Queued& a, const Queued& b) const {
    const auto c = schreyer_compare(a.pair.sig, b.pair.sig, leads_, *ord_);
    if (c != 0) return c > 0;
    if (a.pair.width != b.pair.width) return a.pair.width > b.pair.width;
    return a.seq > b.seq;
  }

  void push(JPair p) {
    queue_.push_back({std::move(p), seq_++});
    std::push_heap(queue_.begin(), queue_.end(), [this](const Queued& a, const Queued& b) { return later(a, b); });
  }

  JPair pop() {
    std::pop_heap(queue_.begin(), queue_.end(), [this](const Queued& a, const Queued& b) { return later(a, b); });
    JPair p = std::move(queue_.back().pair);
    queue_.pop_back();
    return p;
  }

  void add_generator(Polynomial f) {
    const std::size_t r = out_.F.size();
    leads_.push_back(f.lm());
    JPair p{{TwistedMonomial{}, r}, f.lm(), f.width(), kFromGenerator, Monomial{}, IncMap{}};
    out_.F.push_back(std::move(f));
    push(std::move(p));
  }

  bool covered(const Signature& sig, const Monomial& lead) const {
    return !opts_.disable_cover && is_covered(sig, lead, out_.G, out_.S, leads_, *ord_, opts_.action);
  }

  void insert(LabeledPoly p) {
    const std::size_t id = out_.G.size();
    out_.G.push_back(std::move(p));
    ++out_.result.stats.basis_insertions;
    for (std::size_t k = 0; k <= id; ++k) {
      for (auto& j : j_pairs(out_.G[k], k, out_.G[id], id, leads_, *ord_, opts_.action)) {
        ++out_.result.stats.pairs_generated;
        if (limits_.max_width && j.width > *limits_.max_width) {
          ++deferred_;
          continue;
        }
        if (covered(j.sig, j.lead)) {
          ++out_.result.stats.covered_pairs;
          continue;
        }
        push(std::move(j));
      }
    }
  }

  Polynomial materialize(const JPair& j) const {
    if (j.source == kFromGenerator) return out_.F[j.sig.index];
    return mul_term(act(j.map, out_.G[j.source].poly), Coefficient(1), j.cofactor);
  }

  void loop() {
    auto& stats = out_.result.stats;
    std::optional<Signature> last;
    while (!queue_.empty()) {
      JPair j = pop();
      if (last && *last == j.sig) {
        ++stats.covered_pairs;
        continue;
      }
      last = j.sig;
      if (covered(j.sig, j.lead)) {
        ++stats.covered_pairs;
        continue;
      }
      if (limits_.max_pairs && stats.pairs_processed >= *limits_.max_pairs) {
        out_.result.status = Status::budget_exhausted;
        out_.result.budget_reason = "max_pairs";
        return;
      }
      ++stats.pairs_processed;
      auto red = regular_top_reduce({j.sig, materialize(j)}, out_.G, leads_, *ord_, opts_.action);
      if (red.singular) {
        ++stats.singular_discards;
        continue;
      }
      LabeledPoly h = std::move(red.result);
      if (h.poly.is_zero()) {
        ++stats.zero_reductions;
        ++stats.syzygies;
        out_.S.push_back(h.sig);
        continue;
      }
      if (opts_.action == Action::inc) {
        std::vector<Polynomial> basis;
        basis.reserve(out_.G.size());
        for (const auto& g : out_.G) basis.push_back(g.poly);
        Polynomial hp = normal_form(h.poly, basis);
        if (!(hp == h.poly)) {
          ++stats.nf_changed;
          if (hp.is_zero()) {
            ++stats.zero_reductions;
            continue;
          }
          const std::size_t r = out_.F.size();
          hp = hp.monic();
          leads_.push_back(hp.lm());
          out_.F.push_back(hp);
          h = {{TwistedMonomial{}, r}, std::move(hp)};
        }
      }
      insert(std::move(h));
      if (limits_.max_basis && out_.G.size() > *limits_.max_basis) {
        out_.result.status = Status::budget_exhausted;
        out_.result.budget_reason = "max_basis";
        return;
      }
    }
  }

  EngineLimits limits_;
  SignatureOptions opts_;
  const MonomialOrder* ord_ = nullptr;
  std::vector<Monomial> leads_;
  std::vector<Queued> queue_;
  std::uint64_t seq_ = 0;
  std::uint64_t deferred_ = 0;
  SignatureRun out_;
};

}  // namespace

SignatureRun signature_completion(const std::vector<Polynomial>& F, const EngineLimits& limits,
                                  const SignatureOptions& opts) {
  return SignatureEngine(limits, opts).run(F);
}

EgbResult egb_signature(const std::vector<Polynomial>& F, const EngineLimits& limits,
                        const SignatureOptions& opts) {
  return signature_completion(F, limits, opts).result;
}

SignatureRun strong_buchberger(const std::vector<Polynomial>& F, const EngineLimits& limits) {
  SignatureOptions opts;
  opts.action = Action::trivial;
  EngineLimits lim = limits;
  lim.max_width.reset();
  return signature_completion(F, lim, opts);
}

}  // namespace egb
