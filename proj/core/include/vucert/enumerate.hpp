#pragma once

#include <functional>

#include "vucert/forcing.hpp"

namespace vucert {

/// Loop gluing matrices with det = -1, b in [1, b_bound], |a|,|c|,|d| <=
/// entry_bound and a - d >= gap_min, in lexicographic (a, b, c, d) order.
inline void enumerate_loop_gluings(long entry_bound, long b_bound, long gap_min,
                                   const std::function<void(const GluingMatrix&)>& visit) {
  for (long a = -entry_bound; a <= entry_bound; ++a)
    for (long b = 1; b <= b_bound; ++b)
      for (long c = -entry_bound; c <= entry_bound; ++c)
        for (long d = -entry_bound; d <= entry_bound; ++d) {
          if (a - d < gap_min) continue;
          if (a * d - b * c != -1) continue;
          visit(GluingMatrix{a, b, c, d, GraphCase::Loop});
        }
}

/// Normalized edge gluing matrices: a, b in [1, entry_bound], c, d in
/// [0, entry_bound], |det| = 1, in lexicographic order.
inline void enumerate_edge_gluings(long entry_bound,
                                   const std::function<void(const GluingMatrix&)>& visit) {
  for (long a = 1; a <= entry_bound; ++a)
    for (long b = 1; b <= entry_bound; ++b)
      for (long c = 0; c <= entry_bound; ++c)
        for (long d = 0; d <= entry_bound; ++d) {
          long det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          visit(GluingMatrix{a, b, c, d, GraphCase::Edge});
        }
}

namespace detail {

inline void fill_grid(std::vector<std::vector<std::size_t>>& grid, std::size_t r, std::size_t s,
                      std::size_t cell_max, std::size_t remaining,
                      const std::function<void(const std::vector<std::vector<std::size_t>>&)>& visit) {
  if (r == grid.size()) {
    visit(grid);
    return;
  }
  std::size_t nr = s + 1 == grid[r].size() ? r + 1 : r;
  std::size_t ns = s + 1 == grid[r].size() ? 0 : s + 1;
  for (std::size_t v = 0; v <= std::min(cell_max, remaining); ++v) {
    grid[r][s] = v;
    fill_grid(grid, nr, ns, cell_max, remaining - v, visit);
  }
  grid[r][s] = 0;
}

}  // namespace detail

/// Valid loop patterns with k <= k_max and total dimension <= total_max
/// (matching positive row and column sums), in size-then-lexicographic order.
inline void enumerate_loop_patterns(std::size_t k_max, std::size_t total_max,
                                    const std::function<void(const BlockPattern&)>& visit) {
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<std::vector<std::size_t>> grid(k, std::vector<std::size_t>(k, 0));
    detail::fill_grid(grid, 0, 0, total_max, total_max,
                      [&](const std::vector<std::vector<std::size_t>>& g) {
                        BlockPattern p{GraphCase::Loop, g};
                        for (std::size_t r = 0; r < k; ++r) {
                          if (p.row_sum(r) != p.col_sum(r)) return;
                          if (p.row_sum(r) == 0) return;
                        }
                        visit(p);
                      });
  }
}

/// Valid edge patterns with k <= k_max, l <= l_max and every cell at most
/// cell_max (all row and column sums positive).
inline void enumerate_edge_patterns(std::size_t k_max, std::size_t l_max, std::size_t cell_max,
                                    const std::function<void(const BlockPattern&)>& visit) {
  for (std::size_t k = 1; k <= k_max; ++k)
    for (std::size_t l = 1; l <= l_max; ++l) {
      std::vector<std::vector<std::size_t>> grid(k, std::vector<std::size_t>(l, 0));
      detail::fill_grid(grid, 0, 0, cell_max, cell_max * k * l,
                        [&](const std::vector<std::vector<std::size_t>>& g) {
                          BlockPattern p{GraphCase::Edge, g};
                          for (std::size_t r = 0; r < k; ++r)
                            if (p.row_sum(r) == 0) return;
                          for (std::size_t s = 0; s < l; ++s)
                            if (p.col_sum(s) == 0) return;
                          visit(p);
                        });
    }
}

/// Canonical key of an edge pattern under row and column permutations
/// (relabeling the eigenvalue indices gives an isomorphic system).
std::vector<std::size_t> canonical_pattern_key(const std::vector<std::vector<std::size_t>>& dims);

}  // namespace vucert
