#include "posetenum/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace posetenum::kernels {

namespace {

// Dense local comparability table for the induced subposet.
std::vector<std::uint8_t> local_incomparability(const Poset& p,
                                                std::span<const Element> el) {
  const std::size_t m = el.size();
  std::vector<std::uint8_t> inc(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!p.comparable(el[a], el[b])) inc[a * m + b] = inc[b * m + a] = 1;
  return inc;
}

std::vector<std::uint32_t> down_masks(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint32_t> down(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < u; ++v)
      if (p.less(v, u)) down[u] |= 1u << v;
  return down;
}

std::vector<std::uint32_t> comparable_masks(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint32_t> comp(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (p.comparable(u, v)) comp[u] |= 1u << v;
  return comp;
}

void check_mask_size(const Poset& p) {
  if (p.size() > 26)
    throw std::invalid_argument("brute-force kernels need n <= 26");
}

bool is_ideal(std::uint32_t mask, const std::vector<std::uint32_t>& down) {
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const int u = __builtin_ctz(rest);
    if ((down[u] & ~mask) != 0) return false;
  }
  return true;
}

bool is_antichain(std::uint32_t mask, const std::vector<std::uint32_t>& comp) {
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    const int u = __builtin_ctz(rest);
    if ((comp[u] & mask) != 0) return false;
  }
  return true;
}

template <typename Pred>
std::vector<std::uint32_t> filter_serial(int n, Pred&& keep) {
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m)
    if (keep(static_cast<std::uint32_t>(m))) out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

// Static chunking keeps each thread's hits ascending, so concatenating the
// per-thread buffers in thread order yields a sorted result.
template <typename Pred>
std::vector<std::uint32_t> filter_parallel(int n, Pred&& keep) {
  const std::int64_t total = std::int64_t{1} << n;
  std::vector<std::vector<std::uint32_t>> parts;
#pragma omp parallel
  {
#pragma omp single
    parts.resize(omp_get_num_threads());
    auto& mine = parts[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t m = 0; m < total; ++m)
      if (keep(static_cast<std::uint32_t>(m))) mine.push_back(static_cast<std::uint32_t>(m));
  }
  std::vector<std::uint32_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

PosetStats pair_triple_counts_serial(const Poset& p,
                                     std::span<const Element> el) {
  const std::int64_t m = static_cast<std::int64_t>(el.size());
  const auto inc = local_incomparability(p, el);
  PosetStats s{m, 0, 0};
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = a + 1; b < m; ++b) {
      if (!inc[a * m + b]) continue;
      ++s.q;
      for (std::int64_t c = b + 1; c < m; ++c)
        if (inc[a * m + c] && inc[b * m + c]) ++s.t;
    }
  return s;
}

PosetStats pair_triple_counts_parallel(const Poset& p,
                                       std::span<const Element> el) {
  const std::int64_t m = static_cast<std::int64_t>(el.size());
  const auto inc = local_incomparability(p, el);
  std::int64_t q = 0;
  std::int64_t t = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : q, t)
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = a + 1; b < m; ++b) {
      if (!inc[a * m + b]) continue;
      ++q;
      for (std::int64_t c = b + 1; c < m; ++c)
        if (inc[a * m + c] && inc[b * m + c]) ++t;
    }
  return PosetStats{m, q, t};
}

void transitive_closure_serial(int n, std::vector<std::uint8_t>& rel) {
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!rel[static_cast<std::size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        rel[static_cast<std::size_t>(i) * n + j] |= rel[static_cast<std::size_t>(k) * n + j];
    }
}

void transitive_closure_parallel(int n, std::vector<std::uint8_t>& rel) {
  for (int k = 0; k < n; ++k) {
    const std::uint8_t* row_k = rel.data() + static_cast<std::size_t>(k) * n;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      std::uint8_t* row_i = rel.data() + static_cast<std::size_t>(i) * n;
      if (i == k || !row_i[k]) continue;
      for (int j = 0; j < n; ++j) row_i[j] |= row_k[j];
    }
  }
}

std::vector<std::uint32_t> ideal_masks_serial(const Poset& p) {
  check_mask_size(p);
  const auto down = down_masks(p);
  return filter_serial(p.size(), [&](std::uint32_t m) { return is_ideal(m, down); });
}

std::vector<std::uint32_t> ideal_masks_parallel(const Poset& p) {
  check_mask_size(p);
  const auto down = down_masks(p);
  return filter_parallel(p.size(), [&](std::uint32_t m) { return is_ideal(m, down); });
}

std::vector<std::uint32_t> antichain_masks_serial(const Poset& p) {
  check_mask_size(p);
  const auto comp = comparable_masks(p);
  return filter_serial(p.size(), [&](std::uint32_t m) { return is_antichain(m, comp); });
}

std::vector<std::uint32_t> antichain_masks_parallel(const Poset& p) {
  check_mask_size(p);
  const auto comp = comparable_masks(p);
  return filter_parallel(p.size(), [&](std::uint32_t m) { return is_antichain(m, comp); });
}

}  // namespace posetenum::kernels
