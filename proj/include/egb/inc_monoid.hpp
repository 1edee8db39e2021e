#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace egb {

using Index = std::uint32_t;

/// A strictly increasing map N -> N, stored as its values on an initial
/// segment {0..d-1}. Beyond d the map continues with slope one from the last
/// stored value (the minimal increasing extension); d = 0 is the identity.
///
/// Records are kept canonical: a trailing value that coincides with the
/// extension of the shorter prefix is trimmed, so two IncMaps compare equal
/// exactly when they are equal as functions.
class IncMap {
public:
  IncMap() = default;
  /// Throws std::invalid_argument if `values` is not strictly increasing.
  explicit IncMap(std::vector<Index> values);
  IncMap(std::initializer_list<Index> values) : IncMap(std::vector<Index>(values)) {}

  static IncMap identity() { return {}; }

  Index operator()(Index i) const noexcept {
    const auto d = values_.size();
    if (i < d) return values_[i];
    if (d == 0) return i;
    return values_[d - 1] + (i - static_cast<Index>(d) + 1);
  }

  std::span<const Index> values() const noexcept { return values_; }
  std::size_t domain_size() const noexcept { return values_.size(); }
  bool is_identity() const noexcept { return values_.empty(); }

  friend bool operator==(const IncMap&, const IncMap&) = default;
  friend auto operator<=>(const IncMap& a, const IncMap& b) { return a.values_ <=> b.values_; }

private:
  void canonicalize();
  std::vector<Index> values_;
};

/// Index of the i-th generator tau_i: j -> j for j < i, j -> j + 1 otherwise.
using TauWord = std::vector<Index>;

/// Function composition a o b.
IncMap compose(const IncMap& a, const IncMap& b);

/// The map skipping value i.
IncMap tau(Index i);

/// Rewrites a word of generators into the unique weakly increasing word
/// acting identically, using tau_{j+1} tau_i = tau_i tau_j for j >= i.
TauWord standard_form(std::span<const Index> word);

/// Composite map tau_{w_1} o ... o tau_{w_d} (rightmost acts first).
IncMap tau_to_map(std::span<const Index> word);

/// Inverse of tau_to_map: the image complement {c_1 < ... < c_d} corresponds to
/// the word with entries c_k - (k - 1).
TauWord map_to_tau(const IncMap& rho);

/// Image complement of rho (finite by the extension convention).
std::vector<Index> image_complement(const IncMap& rho);

/// All C(n, d) strictly increasing maps {0..d-1} -> {0..n-1}, canonicalized,
/// in lexicographic order of their value sequences.
/// Throws std::invalid_argument if d > n.
std::vector<IncMap> increasing_maps(std::size_t d, std::size_t n);

/// Calls `visit` for each strictly increasing sequence of length d in [0, n),
/// in lexicographic order. Stops early when `visit` returns false.
void for_each_increasing(std::size_t d, std::size_t n,
                         const std::function<bool(std::span<const Index>)>& visit);

std::ostream& operator<<(std::ostream& os, const IncMap& rho);

struct IncMapHash {
  std::size_t operator()(const IncMap& rho) const noexcept;
};

}  // namespace egb
