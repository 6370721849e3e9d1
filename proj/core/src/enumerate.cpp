#include "vucert/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace vucert {

std::vector<std::size_t> canonical_pattern_key(const std::vector<std::vector<std::size_t>>& dims) {
  std::size_t k = dims.size();
  std::size_t l = dims.front().size();
  std::vector<std::size_t> rows(k), cols(l);
  std::iota(rows.begin(), rows.end(), std::size_t(0));
  std::iota(cols.begin(), cols.end(), std::size_t(0));

  std::vector<std::size_t> best;
  std::vector<std::size_t> flat(k * l);
  std::vector<std::size_t> row_perm = rows;
  do {
    std::vector<std::size_t> col_perm = cols;
    do {
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < l; ++s) flat[r * l + s] = dims[row_perm[r]][col_perm[s]];
      if (best.empty() || flat < best) best = flat;
    } while (std::next_permutation(col_perm.begin(), col_perm.end()));
  } while (std::next_permutation(row_perm.begin(), row_perm.end()));
  best.push_back(k);
  best.push_back(l);
  return best;
}

}  // namespace vucert
