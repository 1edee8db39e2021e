#include "egb/inc_monoid.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace egb {

IncMap::IncMap(std::vector<Index> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] <= values_[i - 1])
      throw std::invalid_argument("IncMap: values must be strictly increasing");
  }
  canonicalize();
}

void IncMap::canonicalize() {
  while (!values_.empty()) {
    const auto d = values_.size();
    const Index extended = d == 1 ? 0 : values_[d - 2] + 1;
    if (values_.back() != extended) break;
    values_.pop_back();
  }
}

IncMap compose(const IncMap& a, const IncMap& b) {
  if (b.is_identity()) return a;
  if (a.is_identity()) return b;
  // Past both stored prefixes the composite is a slope-one shift; the
  // canonical trim removes any redundant tail.
  const std::size_t len = b.domain_size() + a.domain_size() + 1;
  std::vector<Index> values(len);
  for (std::size_t i = 0; i < len; ++i) values[i] = a(b(static_cast<Index>(i)));
  return IncMap(std::move(values));
}

IncMap tau(Index i) {
  std::vector<Index> values(i + 1);
  for (Index j = 0; j < i; ++j) values[j] = j;
  values[i] = i + 1;
  return IncMap(std::move(values));
}

TauWord standard_form(std::span<const Index> word) {
  TauWord w(word.begin(), word.end());
  // Bubble out-of-order neighbours: tau_a tau_b with a > b becomes tau_b tau_{a-1}.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        const Index a = w[k];
        w[k] = w[k + 1];
        w[k + 1] = a - 1;
        changed = true;
      }
    }
  }
  return w;
}

IncMap tau_to_map(std::span<const Index> word) {
  // The word's image complement is {w_k + (k - 1)} once in standard form.
  const TauWord w = standard_form(word);
  if (w.empty()) return IncMap::identity();
  std::vector<Index> complement(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) complement[k] = w[k] + static_cast<Index>(k);
  std::vector<Index> values;
  const Index last = complement.back();
  values.reserve(last + 1);
  std::size_t c = 0;
  for (Index v = 0; v <= last + 1; ++v) {
    if (c < complement.size() && complement[c] == v) {
      ++c;
      continue;
    }
    values.push_back(v);
  }
  return IncMap(std::move(values));
}

std::vector<Index> image_complement(const IncMap& rho) {
  std::vector<Index> out;
  const auto vals = rho.values();
  if (vals.empty()) return out;
  std::size_t k = 0;
  for (Index v = 0; v <= vals.back(); ++v) {
    if (k < vals.size() && vals[k] == v)
      ++k;
    else
      out.push_back(v);
  }
  return out;
}

TauWord map_to_tau(const IncMap& rho) {
  TauWord w = image_complement(rho);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] -= static_cast<Index>(k);
  return w;
}

void for_each_increasing(std::size_t d, std::size_t n,
                         const std::function<bool(std::span<const Index>)>& visit) {
  if (d > n) return;
  std::vector<Index> seq(d);
  for (std::size_t i = 0; i < d; ++i) seq[i] = static_cast<Index>(i);
  while (true) {
    if (!visit(seq)) return;
    // Advance to the next combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && seq[i - 1] == n - d + i - 1) --i;
    if (i == 0) return;
    ++seq[i - 1];
    for (std::size_t j = i; j < d; ++j) seq[j] = seq[j - 1] + 1;
  }
}

std::vector<IncMap> increasing_maps(std::size_t d, std::size_t n) {
  if (d > n) throw std::invalid_argument("increasing_maps: domain larger than codomain");
  std::vector<IncMap> out;
  for_each_increasing(d, n, [&](std::span<const Index> seq) {
    out.emplace_back(std::vector<Index>(seq.begin(), seq.end()));
    return true;
  });
  return out;
}

std::ostream& operator<<(std::ostream& os, const IncMap& rho) {
  os << '[';
  const auto vals = rho.values();
  for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
  return os << ']';
}

std::size_t IncMapHash::operator()(const IncMap& rho) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Index v : rho.values()) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

}  // namespace egb
