#pragma once

#include <utility>

#include "hyperhom/exact_linalg.hpp"

namespace hyperhom {

template <class Visit>
void for_each_column_basis(const RatMatrix& f, Visit&& visit) {
  const std::size_t n = f.cols();
  const std::size_t k = rational_rank(f);
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    if (rational_rank(f.select_columns(subset)) == k) {
      if (!visit(std::as_const(subset))) return;
    }
    // Next k-combination of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace hyperhom
