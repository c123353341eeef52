#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace siegel {

// Advances `idx` (strictly increasing, values in [0, n)) to the next
// k-subset in lexicographic order; false once exhausted.
inline bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<int> first_combination(int k) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

inline std::uint32_t indices_to_mask(const std::vector<int>& idx) {
  std::uint32_t mask = 0;
  for (int i : idx) mask |= (1u << i);
  return mask;
}

inline std::vector<int> mask_to_indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) out.push_back(i);
  }
  return out;
}

inline int mask_size(std::uint32_t mask) { return std::popcount(mask); }

inline std::uint32_t full_mask(int m) {
  return m == 32 ? ~0u : ((1u << m) - 1u);
}

}  // namespace siegel
