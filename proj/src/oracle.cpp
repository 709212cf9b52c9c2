#include "posetenum/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "posetenum/kernels.hpp"

namespace posetenum {

namespace {

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<ElementSet> expand(const std::vector<std::uint32_t>& masks) {
  std::vector<ElementSet> sets;
  sets.reserve(masks.size());
  for (std::uint32_t m : masks) {
    ElementSet s;
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1)
      s.push_back(__builtin_ctz(rest));
    sets.push_back(std::move(s));
  }
  return sets;
}

void check_size(const Poset& p) {
  if (p.size() > kOracleMaxElements)
    throw std::invalid_argument("oracle refuses posets with more than 22 elements");
}

}  // namespace

SetFamily::SetFamily(std::vector<ElementSet> sets) : sets_(std::move(sets)) {
  for (auto& s : sets_) std::sort(s.begin(), s.end());
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end())
    throw std::invalid_argument("set family contains a repeated set");
}

bool SetFamily::contains(const ElementSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
}

SetFamily brute_ideals(const Poset& p) {
  check_size(p);
  return SetFamily(expand(kernels::ideal_masks_parallel(p)));
}

SetFamily brute_antichains(const Poset& p) {
  check_size(p);
  return SetFamily(expand(kernels::antichain_masks_parallel(p)));
}

std::size_t symmetric_distance(const ElementSet& a, const ElementSet& b) {
  std::size_t i = 0, j = 0, d = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      ++d;
      ++i;
    } else if (i == a.size() || b[j] < a[i]) {
      ++d;
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return d;
}

std::optional<GrayViolation> verify_gray(const std::vector<ElementSet>& stream,
                                         std::size_t k) {
  for (std::size_t i = 1; i < stream.size(); ++i) {
    const std::size_t d = symmetric_distance(stream[i - 1], stream[i]);
    if (d > k) return GrayViolation{i, d};
  }
  return std::nullopt;
}

bool verify_permutation(const std::vector<ElementSet>& stream, const SetFamily& family) {
  if (stream.size() != family.size()) return false;
  std::vector<ElementSet> sorted = stream;
  for (auto& s : sorted) std::sort(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  return sorted == family.sets();
}

}  // namespace posetenum
