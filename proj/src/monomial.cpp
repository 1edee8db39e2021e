#include "egb/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace egb {

const char* to_string(Constraint c) {
  switch (c) {
    case Constraint::none: return "none";
    case Constraint::strictly_decreasing: return "strictly_decreasing";
    case Constraint::strictly_increasing: return "strictly_increasing";
    case Constraint::all_distinct: return "all_distinct";
  }
  return "none";
}

std::optional<Constraint> constraint_from_string(const std::string& s) {
  if (s == "none") return Constraint::none;
  if (s == "strictly_decreasing") return Constraint::strictly_decreasing;
  if (s == "strictly_increasing") return Constraint::strictly_increasing;
  if (s == "all_distinct") return Constraint::all_distinct;
  return std::nullopt;
}

const char* to_string(OrderKind k) { return k == OrderKind::lex ? "lex" : "grlex"; }

bool satisfies(const Variable& v, Constraint c) noexcept {
  const auto n = v.arity;
  switch (c) {
    case Constraint::none: return true;
    case Constraint::strictly_decreasing:
      for (std::uint32_t k = 1; k < n; ++k)
        if (v.index[k - 1] <= v.index[k]) return false;
      return true;
    case Constraint::strictly_increasing:
      for (std::uint32_t k = 1; k < n; ++k)
        if (v.index[k - 1] >= v.index[k]) return false;
      return true;
    case Constraint::all_distinct:
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
          if (v.index[i] == v.index[j]) return false;
      return true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomial

namespace {

bool var_greater(const Factor& a, const Factor& b) { return compare_vars(a.var, b.var) > 0; }

// Position of v among the (descending) factors, or npos.
std::size_t find_factor(const std::vector<Factor>& fs, const Variable& v) {
  auto it = std::lower_bound(fs.begin(), fs.end(), v, [](const Factor& f, const Variable& x) {
    return compare_vars(f.var, x) > 0;
  });
  if (it != fs.end() && it->var == v) return static_cast<std::size_t>(it - fs.begin());
  return static_cast<std::size_t>(-1);
}

}  // namespace

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), var_greater);
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!factors_.empty() && factors_.back().var == f.var)
      factors_.back().exp += f.exp;
    else
      factors_.push_back(f);
  }
}

Index Monomial::width() const noexcept {
  if (factors_.empty()) return 0;
  Index m = 0;
  for (const auto& f : factors_) m = std::max(m, max_index(f.var));
  return m + 1;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

std::vector<Index> Monomial::index_set() const {
  std::vector<Index> out;
  for (const auto& f : factors_)
    for (std::uint32_t k = 0; k < f.var.arity; ++k) out.push_back(f.var.index[k]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t Monomial::exponent(const Variable& v) const noexcept {
  const auto pos = find_factor(factors_, v);
  return pos == static_cast<std::size_t>(-1) ? 0 : factors_[pos].exp;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  out.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    const int c = compare_vars(i->var, j->var);
    if (c > 0)
      out.push_back(*i++);
    else if (c < 0)
      out.push_back(*j++);
    else {
      out.push_back({i->var, i->exp + j->exp});
      ++i, ++j;
    }
  }
  out.insert(out.end(), i, a.factors_.end());
  out.insert(out.end(), j, b.factors_.end());
  return Monomial(Monomial::Raw{}, std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  if (fa.size() > fb.size()) return false;
  auto j = fb.begin();
  for (const auto& f : fa) {
    while (j != fb.end() && compare_vars(j->var, f.var) > 0) ++j;
    if (j == fb.end() || !(j->var == f.var) || j->exp < f.exp) return false;
    ++j;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::invalid_argument("quotient: divisor does not divide");
  std::vector<Factor> out;
  auto i = a.factors().begin();
  for (const auto& f : b.factors()) {
    if (i != a.factors().end() && i->var == f.var) {
      if (f.exp > i->exp) out.push_back({f.var, f.exp - i->exp});
      ++i;
    } else {
      out.push_back(f);
    }
  }
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  auto i = a.factors().begin(), j = b.factors().begin();
  const auto ie = a.factors().end(), je = b.factors().end();
  while (i != ie && j != je) {
    const int c = compare_vars(i->var, j->var);
    if (c > 0)
      out.push_back(*i++);
    else if (c < 0)
      out.push_back(*j++);
    else {
      out.push_back({i->var, std::max(i->exp, j->exp)});
      ++i, ++j;
    }
  }
  out.insert(out.end(), i, ie);
  out.insert(out.end(), j, je);
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out;
  auto i = a.factors().begin(), j = b.factors().begin();
  const auto ie = a.factors().end(), je = b.factors().end();
  while (i != ie && j != je) {
    const int c = compare_vars(i->var, j->var);
    if (c > 0)
      ++i;
    else if (c < 0)
      ++j;
    else {
      out.push_back({i->var, std::min(i->exp, j->exp)});
      ++i, ++j;
    }
  }
  return Monomial(std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto i = a.factors().begin(), j = b.factors().begin();
  const auto ie = a.factors().end(), je = b.factors().end();
  while (i != ie && j != je) {
    const int c = compare_vars(i->var, j->var);
    if (c == 0) return false;
    if (c > 0)
      ++i;
    else
      ++j;
  }
  return true;
}

Monomial act(const IncMap& rho, const Monomial& m) {
  if (rho.is_identity()) return m;
  std::vector<Factor> out = m.factors_;
  for (auto& f : out)
    for (std::uint32_t k = 0; k < f.var.arity; ++k) f.var.index[k] = rho(f.var.index[k]);
  return Monomial(Monomial::Raw{}, std::move(out));
}

// ---------------------------------------------------------------------------
// Pi-divisibility

namespace {

// Depth-first search over increasing assignments of a's occurring indices to
// b's occurring indices, checking each factor of a as soon as all of its
// indices are assigned.
class WitnessSearch {
public:
  WitnessSearch(const Monomial& a, const Monomial& b)
      : a_(a), b_(b), idx_a_(a.index_set()), idx_b_(b.index_set()), phi_(idx_a_.size()) {
    by_pos_.resize(idx_a_.size());
    for (std::size_t f = 0; f < a.factors().size(); ++f) {
      const Index top = max_index(a.factors()[f].var);
      by_pos_[position(top)].push_back(f);
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    if (!prefilter()) return;
    if (idx_a_.empty()) {
      visit(IncMap::identity());
      return;
    }
    dfs(0, visit);
  }

private:
  std::size_t position(Index i) const {
    return static_cast<std::size_t>(std::lower_bound(idx_a_.begin(), idx_a_.end(), i) -
                                    idx_a_.begin());
  }

  bool prefilter() const {
    const auto& fa = a_.factors();
    const auto& fb = b_.factors();
    if (a_.degree() > b_.degree() || idx_a_.size() > idx_b_.size()) return false;
    // Per-family degree is invariant under the action.
    std::uint32_t fam = 0;
    std::uint64_t da = 0;
    for (std::size_t i = 0; i <= fa.size(); ++i) {
      if (i == fa.size() || (i > 0 && fa[i].var.family != fam)) {
        std::uint64_t db = 0;
        for (const auto& g : fb)
          if (g.var.family == fam) db += g.exp;
        if (da > db) return false;
        if (i == fa.size()) break;
        da = 0;
      }
      fam = fa[i].var.family;
      da += fa[i].exp;
    }
    return true;
  }

  template <class Visit>
  bool dfs(std::size_t pos, Visit& visit) {
    if (pos == idx_a_.size()) return visit(build_map());
    const Index lower =
        pos == 0 ? idx_a_[0] : phi_[pos - 1] + (idx_a_[pos] - idx_a_[pos - 1]);
    auto it = std::lower_bound(idx_b_.begin(), idx_b_.end(), lower);
    const std::size_t remaining = idx_a_.size() - pos - 1;
    for (; it != idx_b_.end(); ++it) {
      if (static_cast<std::size_t>(idx_b_.end() - it) <= remaining) break;
      phi_[pos] = *it;
      if (!factors_fit(pos)) continue;
      if (!dfs(pos + 1, visit)) return false;
    }
    return true;
  }

  bool factors_fit(std::size_t pos) const {
    for (std::size_t f : by_pos_[pos]) {
      Factor img = a_.factors()[f];
      for (std::uint32_t k = 0; k < img.var.arity; ++k)
        img.var.index[k] = phi_[position(img.var.index[k])];
      if (b_.exponent(img.var) < img.exp) return false;
    }
    return true;
  }

  IncMap build_map() const {
    const Index w = idx_a_.back() + 1;
    std::vector<Index> values(w);
    std::size_t p = 0;
    for (Index i = 0; i < w; ++i) {
      if (i < idx_a_[0]) {
        values[i] = i;
        continue;
      }
      while (p + 1 < idx_a_.size() && idx_a_[p + 1] <= i) ++p;
      values[i] = phi_[p] + (i - idx_a_[p]);
    }
    return IncMap(std::move(values));
  }

  const Monomial& a_;
  const Monomial& b_;
  std::vector<Index> idx_a_, idx_b_;
  std::vector<Index> phi_;
  std::vector<std::vector<std::size_t>> by_pos_;
};

}  // namespace

std::optional<IncMap> pi_divides(const Monomial& a, const Monomial& b, Action action) {
  if (action == Action::trivial) {
    if (divides(a, b)) return IncMap::identity();
    return std::nullopt;
  }
  std::optional<IncMap> found;
  WitnessSearch(a, b).run([&](IncMap rho) {
    found = std::move(rho);
    return false;
  });
  return found;
}

std::vector<IncMap> pi_div_witnesses(const Monomial& a, const Monomial& b, Action action) {
  std::vector<IncMap> out;
  if (action == Action::trivial) {
    if (divides(a, b)) out.push_back(IncMap::identity());
    return out;
  }
  WitnessSearch(a, b).run([&](IncMap rho) {
    out.push_back(std::move(rho));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Orders

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare_vars(fa[i].var, fb[i].var);
    if (c != 0) return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    if (fa[i].exp != fb[i].exp) return fa[i].exp <=> fb[i].exp;
  }
  return fa.size() <=> fb.size();
}

std::uint64_t MonomialOrder::degree(const Monomial& m) const {
  if (!use_weights_) return m.degree();
  std::uint64_t d = 0;
  for (const auto& f : m.factors()) {
    const unsigned w = f.var.family < weights_.size() ? weights_[f.var.family] : 1;
    d += static_cast<std::uint64_t>(w) * f.exp;
  }
  return d;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::grlex) {
    const auto da = degree(a), db = degree(b);
    if (da != db) return da <=> db;
  }
  return lex_compare(a, b);
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<FamilySpec> families, OrderSpec order) : declared_(std::move(families)), spec_(std::move(order)) {
  if (declared_.empty()) throw std::invalid_argument("ring: no variable families");
  for (std::size_t i = 0; i < declared_.size(); ++i) {
    const auto& f = declared_[i];
    if (f.arity < 1 || f.arity > kMaxArity)
      throw std::invalid_argument("family " + f.name + ": arity must be in [1, " +
                                  std::to_string(kMaxArity) + "]");
    if (f.weight < 1) throw std::invalid_argument("family " + f.name + ": weight must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (declared_[j].name == f.name)
        throw std::invalid_argument("duplicate family name " + f.name);
  }
  if (spec_.family_precedence.empty())
    for (const auto& f : declared_) spec_.family_precedence.push_back(f.name);
  if (spec_.family_precedence.size() != declared_.size())
    throw std::invalid_argument("order precedence must list every family exactly once");
  for (const auto& name : spec_.family_precedence) {
    auto it = std::find_if(declared_.begin(), declared_.end(),
                           [&](const FamilySpec& f) { return f.name == name; });
    if (it == declared_.end()) throw std::invalid_argument("order precedence names unknown family " + name);
    if (std::any_of(by_rank_.begin(), by_rank_.end(), [&](const FamilySpec& f) { return f.name == name; }))
      throw std::invalid_argument("order precedence repeats family " + name);
    by_rank_.push_back(*it);
  }
  std::vector<unsigned> weights;
  for (const auto& f : by_rank_) weights.push_back(f.weight);
  order_ = MonomialOrder(spec_.kind, std::move(weights), spec_.use_weights);
}

std::optional<std::uint32_t> Ring::rank_of(const std::string& name) const {
  for (std::size_t r = 0; r < by_rank_.size(); ++r)
    if (by_rank_[r].name == name) return static_cast<std::uint32_t>(r);
  return std::nullopt;
}

bool Ring::is_width_order() const noexcept {
  if (spec_.kind != OrderKind::lex || by_rank_.size() != 1) return false;
  const auto& f = by_rank_.front();
  return f.arity == 1 || f.constraint == Constraint::strictly_decreasing;
}

Variable Ring::variable(std::uint32_t rank, std::vector<Index> indices) const {
  const auto& fam = family(rank);
  if (indices.size() != fam.arity)
    throw std::invalid_argument("variable " + fam.name + " expects " + std::to_string(fam.arity) +
                                " indices, got " + std::to_string(indices.size()));
  Variable v;
  v.family = rank;
  v.arity = fam.arity;
  std::copy(indices.begin(), indices.end(), v.index.begin());
  if (!satisfies(v, fam.constraint))
    throw std::invalid_argument("variable " + format(v) + " violates constraint " +
                                to_string(fam.constraint));
  return v;
}

std::string Ring::format(const Variable& v) const {
  std::ostringstream os;
  os << family(v.family).name << '[';
  for (std::uint32_t k = 0; k < v.arity; ++k) os << (k ? "," : "") << v.index[k];
  os << ']';
  return os.str();
}

std::string Ring::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += format(f.var);
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&](std::size_t v) { h = (h ^ v) * 1099511628211ULL; };
  for (const auto& f : m.factors()) {
    mix(f.var.family);
    for (std::uint32_t k = 0; k < f.var.arity; ++k) mix(f.var.index[k]);
    mix(f.exp);
  }
  return h;
}

}  // namespace egb
