#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entwidth {

// One side of a bipartition of the mode set {0..n_modes-1}. The stored side
// is always a nonempty proper subset, kept sorted; the complement is implicit.
class Bipartition {
 public:
  Bipartition(std::vector<int> side, int n_modes)
      : side_(std::move(side)), n_modes_(n_modes) {
    if (n_modes_ < 2)
      throw std::invalid_argument("Bipartition: need at least two modes");
    std::sort(side_.begin(), side_.end());
    if (std::adjacent_find(side_.begin(), side_.end()) != side_.end())
      throw std::invalid_argument("Bipartition: duplicate mode index");
    if (side_.empty() || static_cast<int>(side_.size()) >= n_modes_)
      throw std::invalid_argument(
          "Bipartition: side must be a nonempty proper subset");
    if (side_.front() < 0 || side_.back() >= n_modes_)
      throw std::invalid_argument("Bipartition: mode index out of range");
  }

  static Bipartition from_mask(std::uint64_t mask, int n_modes) {
    if (n_modes < 2 || n_modes > 63)
      throw std::invalid_argument("Bipartition::from_mask: n_modes outside [2, 63]");
    std::vector<int> side;
    for (int m = 0; m < n_modes; ++m)
      if ((mask >> m) & 1u) side.push_back(m);
    return Bipartition(std::move(side), n_modes);
  }

  int n_modes() const { return n_modes_; }
  const std::vector<int>& side() const { return side_; }
  int side_size() const { return static_cast<int>(side_.size()); }

  bool contains(int mode) const {
    return std::binary_search(side_.begin(), side_.end(), mode);
  }

  std::vector<int> complement() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_modes_) - side_.size());
    auto it = side_.begin();
    for (int m = 0; m < n_modes_; ++m) {
      if (it != side_.end() && *it == m) {
        ++it;
        continue;
      }
      out.push_back(m);
    }
    return out;
  }

  Bipartition complemented() const { return Bipartition(complement(), n_modes_); }

  std::uint64_t mask() const {
    if (n_modes_ > 63) throw std::logic_error("Bipartition::mask: more than 63 modes");
    std::uint64_t m = 0;
    for (int v : side_) m |= std::uint64_t{1} << v;
    return m;
  }

  // Canonical side for complement-symmetric caching: the side not containing
  // the last mode, which equals min(mask, ~mask) in the bit-set encoding.
  std::vector<int> canonical_side() const {
    if (contains(n_modes_ - 1)) return complement();
    return side_;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < side_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(side_[i]);
    }
    s += '}';
    return s;
  }

  friend bool operator==(const Bipartition& a, const Bipartition& b) {
    return a.n_modes_ == b.n_modes_ && a.side_ == b.side_;
  }

 private:
  std::vector<int> side_;
  int n_modes_;
};

}  // namespace entwidth
