#pragma once

#include <span>
#include <vector>

namespace hyperspec::detail {

// Leave-one-out products over the members of one edge: out[p] is the product
// of w over every member except the one at position p. Computed with
// prefix/suffix partial products so zero entries are handled exactly.
inline void leave_one_out_products(std::span<const int> edge,
                                   std::span<const double> w,
                                   std::span<double> out) {
  const std::size_t k = edge.size();
  double prefix = 1.0;
  for (std::size_t p = 0; p < k; ++p) {
    out[p] = prefix;
    prefix *= w[static_cast<std::size_t>(edge[p]) - 1];
  }
  double suffix = 1.0;
  for (std::size_t p = k; p-- > 0;) {
    out[p] *= suffix;
    suffix *= w[static_cast<std::size_t>(edge[p]) - 1];
  }
}

}  // namespace hyperspec::detail
