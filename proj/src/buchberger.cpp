#include "egb/buchberger.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace egb {

const char* to_string(Status s) { return s == Status::complete ? "complete" : "budget_exhausted"; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct QueuedPair {
  Index width;
  std::uint64_t degree;
  std::uint64_t seq;
  SPairGen gen;
};

struct QueueOrder {
  bool operator()(const QueuedPair& a, const QueuedPair& b) const {
    // std::priority_queue pops the largest; invert for ascending keys.
    if (a.width != b.width) return a.width > b.width;
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.seq > b.seq;
  }
};

// Shared loop of the equivariant Buchberger engines.
class Completion {
public:
  Completion(const EngineLimits& limits, const BuchbergerOptions& opts) : limits_(limits), opts_(opts) {}

  // Called with n once every pair of width <= n has been processed.
  std::function<void(Index, const std::vector<Polynomial>&)> on_level;

  void add_generator(const Polynomial& f) {
    Polynomial h = normal_form(f, basis_);
    if (!h.is_zero()) insert(h.monic());
  }

  // Runs until the queue drains or a limit trips; returns the limit name.
  std::string run(EngineStats& stats) {
    std::optional<Index> level;
    while (!queue_.empty()) {
      const Index w = queue_.top().width;
      if (on_level && level && w > *level) on_level(*level, basis_);
      level = w;
      if (limits_.max_width && w > *limits_.max_width) return "max_width";
      if (limits_.max_pairs && stats_.pairs_processed >= *limits_.max_pairs) return "max_pairs";
      QueuedPair p = queue_.top();
      queue_.pop();
      ++stats_.pairs_processed;
      const auto& f = basis_[p.gen.left.source];
      const auto& g = basis_[p.gen.right.source];
      Polynomial h = normal_form(s_polynomial(p.gen, f, g), basis_);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic());
      if (limits_.max_basis && basis_.size() > *limits_.max_basis) return "max_basis";
    }
    if (on_level && level) on_level(*level, basis_);
    (void)stats;
    return {};
  }

  const std::vector<Polynomial>& basis() const { return basis_; }
  const EngineStats& stats() const { return stats_; }
  EngineStats& stats() { return stats_; }

private:
  void insert(Polynomial h) {
    const std::size_t id = basis_.size();
    basis_.push_back(std::move(h));
    ++stats_.basis_insertions;
    const Polynomial& hn = basis_.back();
    for (std::size_t k = 0; k <= id; ++k) {
      const auto& g = basis_[k];
      // Count what the coprime filter removes.
      SPairOptions all{false, k, id};
      auto gens = spair_generators(g, hn, all);
      for (auto& gen : gens) {
        if (opts_.coprime_filter &&
            coprime(act(gen.left.map, g.lm()), act(gen.right.map, hn.lm()))) {
          ++stats_.coprime_skipped;
          continue;
        }
        const Index w = spair_width(gen, g, hn);
        const auto deg = hn.ring()->order().degree(gen.overlap);
        queue_.push({w, deg, seq_++, std::move(gen)});
        ++stats_.pairs_generated;
      }
    }
  }

  EngineLimits limits_;
  BuchbergerOptions opts_;
  std::vector<Polynomial> basis_;
  std::priority_queue<QueuedPair, std::vector<QueuedPair>, QueueOrder> queue_;
  std::uint64_t seq_ = 0;
  EngineStats stats_;
};

RingPtr ring_of(const std::vector<Polynomial>& gens) {
  return gens.empty() ? RingPtr{} : gens.front().ring();
}

Index width_of(const std::vector<Polynomial>& gens) {
  Index w = 0;
  for (const auto& g : gens) w = std::max(w, g.width());
  return w;
}

// Drops elements whose lead is Pi-divisible by an earlier-kept element's lead
// through a shift that stays inside width n. Preserves the ideal generated
// inside the width-n truncation.
std::vector<Polynomial> minimalize_within(const std::vector<Polynomial>& gb, Index n) {
  std::vector<Polynomial> sorted = gb;
  const auto& ord = gb.empty() ? MonomialOrder{} : gb.front().ring()->order();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Polynomial& a, const Polynomial& b) { return ord.less(a.lm(), b.lm()); });
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    bool redundant = false;
    for (const auto& k : kept) {
      for (const auto& w : pi_div_witnesses(k.lm(), g.lm())) {
        const Index shifted = k.width() == 0 ? 0 : w(k.width() - 1) + 1;
        if (shifted <= n) {
          redundant = true;
          break;
        }
      }
      if (redundant) break;
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

}  // namespace

EgbResult egb_buchberger(const std::vector<Polynomial>& gens, const EngineLimits& limits,
                         const BuchbergerOptions& opts) {
  const auto t0 = Clock::now();
  EgbResult res;
  Completion c(limits, opts);
  for (const auto& f : gens)
    if (!f.is_zero()) c.add_generator(f);
  const std::string reason = c.run(res.stats);
  res.stats = c.stats();
  if (!reason.empty()) {
    res.status = Status::budget_exhausted;
    res.budget_reason = reason;
  }
  res.basis = autoreduce(c.basis());
  res.stats.wall_seconds = seconds_since(t0);
  return res;
}

std::vector<Polynomial> orbit_truncate(const std::vector<Polynomial>& gens, Index n) {
  if (n < width_of(gens)) throw std::invalid_argument("orbit_truncate: n is below the generators' width");
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (const auto& f : gens) {
    for (const auto& rho : increasing_maps(f.width(), n)) {
      Polynomial g = act(rho, f);
      if (seen.insert(format(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Polynomial> classical_buchberger(const std::vector<Polynomial>& gens,
                                             std::uint64_t max_pairs) {
  std::vector<Polynomial> basis;
  for (const auto& f : gens) {
    Polynomial h = normal_form(f, basis, {.action = Action::trivial});
    if (!h.is_zero()) basis.push_back(h.monic());
  }
  if (basis.empty()) return basis;
  const auto& ord = basis.front().ring()->order();

  // Pairs keyed by (degree of lcm, creation) for the normal selection strategy.
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::multimap<std::pair<std::uint64_t, std::uint64_t>, Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> done;
  std::uint64_t seq = 0;
  auto add_pairs = [&](std::size_t id) {
    for (std::size_t k = 0; k < id; ++k) {
      Monomial l = lcm(basis[k].lm(), basis[id].lm());
      pairs.emplace(std::make_pair(ord.degree(l), seq++), Pair{k, id, std::move(l)});
    }
  };
  for (std::size_t id = 1; id < basis.size(); ++id) add_pairs(id);

  std::uint64_t processed = 0;
  auto is_done = [&](std::size_t a, std::size_t b) {
    return done.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  while (!pairs.empty()) {
    auto node = pairs.begin();
    Pair p = node->second;
    pairs.erase(node);
    done.insert({p.i, p.j});
    const auto& f = basis[p.i];
    const auto& g = basis[p.j];
    if (coprime(f.lm(), g.lm())) continue;
    // Chain criterion: some k with lm_k | lcm whose pairs with i and j are settled.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (divides(basis[k].lm(), p.lcm) && is_done(p.i, k) && is_done(p.j, k)) chain = true;
    }
    if (chain) continue;
    if (++processed > max_pairs) throw BudgetExhausted("classical_buchberger: max_pairs", basis);
    Polynomial s = subtract(mul_term(f, Coefficient(1), quotient(p.lcm, f.lm())),
                            mul_term(g, f.lc() / g.lc(), quotient(p.lcm, g.lm())));
    Polynomial h = normal_form(s, basis, {.action = Action::trivial});
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    add_pairs(basis.size() - 1);
  }
  std::vector<Polynomial> reduced = autoreduce(basis, Action::trivial);
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) { return ord.less(a.lm(), b.lm()); });
  return reduced;
}

bool is_egb(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> nz;
  for (const auto& g : basis)
    if (!g.is_zero()) nz.push_back(g);
  for (std::size_t j = 0; j < nz.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      for (const auto& gen : spair_generators(nz[i], nz[j], {true, i, j})) {
        if (!normal_form(s_polynomial(gen, nz[i], nz[j]), nz).is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<Polynomial> autoreduce(const std::vector<Polynomial>& basis, Action action) {
  std::vector<Polynomial> cur;
  for (const auto& g : basis)
    if (!g.is_zero()) cur.push_back(g.monic());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(cur.size() - 1);
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (j != k) others.push_back(cur[j]);
      Polynomial r = normal_form(cur[k], others, {.action = action}).monic();
      if (r == cur[k]) continue;
      changed = true;
      if (r.is_zero()) {
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(k));
        break;
      }
      cur[k] = std::move(r);
    }
  }
  sort_for_output(cur);
  return cur;
}

void sort_for_output(std::vector<Polynomial>& basis) {
  if (basis.empty()) return;
  const auto& ord = basis.front().ring()->order();
  std::stable_sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.width() != b.width()) return a.width() < b.width();
    if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
    const auto da = ord.degree(a.lm()), db = ord.degree(b.lm());
    if (da != db) return da < db;
    return ord.less(a.lm(), b.lm());
  });
}

Polynomial orbit_representative(const Polynomial& f) {
  std::vector<Index> idx;
  for (const auto& t : f.terms()) {
    auto s = t.mono.index_set();
    idx.insert(idx.end(), s.begin(), s.end());
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::vector<Factor> fs = t.mono.factors();
    for (auto& fac : fs)
      for (std::uint32_t k = 0; k < fac.var.arity; ++k)
        fac.var.index[k] = static_cast<Index>(
            std::lower_bound(idx.begin(), idx.end(), fac.var.index[k]) - idx.begin());
    out.push_back({t.coef, Monomial(std::move(fs))});
  }
  return Polynomial(f.ring(), std::move(out)).monic();
}

std::vector<std::string> orbit_signature(const std::vector<Polynomial>& basis) {
  std::vector<std::string> out;
  for (const auto& g : basis)
    if (!g.is_zero()) out.push_back(format(orbit_representative(g)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool reduces_to_zero(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, Action action) {
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& f) {
    return normal_form(f, b, {.action = action}).is_zero();
  });
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, Action action) {
  return reduces_to_zero(a, b, action) && reduces_to_zero(b, a, action);
}

EgbResult egb_incremental(const std::vector<Polynomial>& gens, const EngineLimits& limits,
                          const IncrementalOptions& opts) {
  const auto t0 = Clock::now();
  EgbResult res;
  std::vector<Polynomial> input;
  for (const auto& f : gens)
    if (!f.is_zero()) input.push_back(f);
  if (input.empty()) return res;
  const RingPtr ring = ring_of(input);

  IncrementalMode mode = opts.mode;
  if (mode == IncrementalMode::automatic)
    mode = ring->is_width_order() ? IncrementalMode::width_queue : IncrementalMode::truncation;
  if (mode == IncrementalMode::width_queue && !ring->is_width_order())
    throw ConfigError("width-queue incremental mode requires a width order");

  if (mode == IncrementalMode::width_queue) {
    // Under a width order reductions never raise width, so the level-n
    // basis is exactly the state after all pairs of width <= n.
    Completion c(limits, {});
    std::optional<std::vector<std::string>> prev;
    c.on_level = [&](Index n, const std::vector<Polynomial>& basis) {
      ++res.stats.levels;
      res.stats.final_level = n;
      auto sig = orbit_signature(autoreduce(basis));
      if (prev && *prev == sig && !res.stats.stabilized_at) res.stats.stabilized_at = n - 1;
      prev = std::move(sig);
    };
    for (const auto& f : input) c.add_generator(f);
    const std::string reason = c.run(res.stats);
    const auto levels = res.stats.levels;
    const auto final_level = res.stats.final_level;
    const auto stabilized = res.stats.stabilized_at;
    res.stats = c.stats();
    res.stats.levels = levels;
    res.stats.final_level = final_level;
    res.stats.stabilized_at = stabilized;
    if (!reason.empty()) {
      res.status = Status::budget_exhausted;
      res.budget_reason = reason;
    }
    res.basis = autoreduce(c.basis());
    res.stats.wall_seconds = seconds_since(t0);
    return res;
  }

  // Truncation route: classical Groebner basis of each generator truncation.
  std::vector<Polynomial> level_basis;
  std::optional<std::vector<Polynomial>> found;
  Index extra = 0;
  std::optional<std::vector<std::string>> prev;
  const std::uint64_t pair_budget = limits.max_pairs.value_or(1000000);
  auto exhausted = [&](const char* reason) {
    if (found) return;
    res.status = Status::budget_exhausted;
    res.budget_reason = reason;
  };
  for (Index n = width_of(input);; ++n) {
    if (limits.max_width && n > *limits.max_width) {
      exhausted("max_width");
      break;
    }
    std::vector<Polynomial> seed = level_basis;
    seed.insert(seed.end(), input.begin(), input.end());
    std::vector<Polynomial> gb;
    try {
      gb = classical_buchberger(orbit_truncate(seed, n), pair_budget);
    } catch (const BudgetExhausted& e) {
      exhausted("max_pairs");
      if (!found) level_basis = minimalize_within(e.partial(), n);
      break;
    }
    ++res.stats.levels;
    res.stats.final_level = n;
    level_basis = autoreduce(minimalize_within(gb, n));
    if (!found) res.stats.basis_insertions = level_basis.size();
    auto sig = orbit_signature(level_basis);
    const bool stable = prev && *prev == sig;
    if (stable && !res.stats.stabilized_at) res.stats.stabilized_at = n - 1;
    prev = std::move(sig);
    if (found) {
      if (stable || ++extra >= opts.confirm_levels) break;
      continue;
    }
    if (limits.max_basis && level_basis.size() > *limits.max_basis) {
      exhausted("max_basis");
      break;
    }
    if (is_egb(level_basis)) {
      found = level_basis;
      if (opts.confirm_levels == 0) break;
    }
  }
  if (found) level_basis = std::move(*found);
  res.basis = autoreduce(level_basis);
  res.stats.wall_seconds = seconds_since(t0);
  return res;
}

}  // namespace egb
