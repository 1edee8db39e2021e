#include "egb/spairs.hpp"

#include <algorithm>
#include <stdexcept>

namespace egb {

std::vector<std::pair<IncMap, IncMap>> interlacings(std::size_t wf, std::size_t wg) {
  std::vector<std::pair<IncMap, IncMap>> out;
  for (std::size_t k = std::max(wf, wg); k <= wf + wg; ++k) {
    // The right image must contain everything the left misses, plus
    // `shared` entries of the left image.
    const std::size_t shared = wf + wg - k;
    for_each_increasing(wf, k, [&](std::span<const Index> left) {
      std::vector<Index> missing;
      std::size_t p = 0;
      for (Index v = 0; v < k; ++v) {
        if (p < left.size() && left[p] == v)
          ++p;
        else
          missing.push_back(v);
      }
      for_each_increasing(shared, wf, [&](std::span<const Index> pick) {
        std::vector<Index> right = missing;
        for (Index i : pick) right.push_back(left[i]);
        std::sort(right.begin(), right.end());
        out.emplace_back(IncMap(std::vector<Index>(left.begin(), left.end())), IncMap(std::move(right)));
        return true;
      });
      return true;
    });
  }
  return out;
}

std::vector<SPairGen> spair_generators(const Monomial& lm_f, Index width_f, const Monomial& lm_g,
                                       Index width_g, const SPairOptions& opts) {
  std::vector<SPairGen> out;
  const bool self = opts.left_id == opts.right_id;
  for (auto& [s1, s2] : interlacings(width_f, width_g)) {
    if (self && s1 == s2) continue;
    Monomial a = act(s1, lm_f);
    Monomial b = act(s2, lm_g);
    if (opts.coprime_filter && coprime(a, b)) continue;
    Monomial m = lcm(a, b);
    Monomial c1 = quotient(m, a);
    Monomial c2 = quotient(m, b);
    out.push_back({{std::move(c1), std::move(s1), opts.left_id},
                   {std::move(c2), std::move(s2), opts.right_id},
                   std::move(m)});
  }
  return out;
}

std::vector<SPairGen> spair_generators(const Polynomial& f, const Polynomial& g,
                                       const SPairOptions& opts) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("spair_generators: zero operand");
  return spair_generators(f.lm(), f.width(), g.lm(), g.width(), opts);
}

Polynomial s_polynomial(const SPairGen& gen, const Polynomial& f, const Polynomial& g) {
  Polynomial h1 = mul_term(act(gen.left.map, f), Coefficient(1), gen.left.cofactor);
  return sub_scaled(h1, f.lc() / g.lc(), gen.right.cofactor, gen.right.map, g);
}

Index spair_width(const SPairGen& gen, const Polynomial& f, const Polynomial& g) {
  auto side = [](const SPairSide& s, const Polynomial& p) {
    Index w = p.width() == 0 ? 0 : s.map(p.width() - 1) + 1;
    return std::max(w, s.cofactor.width());
  };
  return std::max(side(gen.left, f), side(gen.right, g));
}

}  // namespace egb
