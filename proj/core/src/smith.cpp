#include "vucert/smith.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

namespace vucert {

namespace {

// Row operations tracked in U, column operations in V, so that
// U * M * V stays equal to the working matrix throughout.
struct SnfWork {
  IntMatrix m;
  IntMatrix u;
  IntMatrix v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += factor * m.at(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += factor * u.at(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += factor * m.at(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += factor * v.at(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
  }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  std::size_t rows = input.rows(), cols = input.cols();
  SnfWork w{input, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  std::size_t t = 0;
  std::size_t steps = std::min(rows, cols);
  while (t < steps) {
    // Find the smallest nonzero entry in the trailing submatrix.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Int& e = w.m.at(i, j);
        if (e == 0) continue;
        if (!found || abs_int(e) < best) {
          found = true;
          best = abs_int(e);
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int q = w.m.at(i, t) / w.m.at(t, t);
      if (q != 0) w.add_row_multiple(i, t, -q);
      if (w.m.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int q = w.m.at(t, j) / w.m.at(t, t);
      if (q != 0) w.add_col_multiple(j, t, -q);
      if (w.m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repick the pivot

    // Divisibility: the pivot must divide the whole trailing block.
    bool divides_all = true;
    for (std::size_t i = t + 1; i < rows && divides_all; ++i)
      for (std::size_t j = t + 1; j < cols && divides_all; ++j)
        if (w.m.at(i, j) % w.m.at(t, t) != 0) {
          w.add_row_multiple(t, i, Int(1));
          divides_all = false;
        }
    if (!divides_all) continue;

    if (w.m.at(t, t) < 0) w.negate_row(t);
    ++t;
  }
  return SmithResult{std::move(w.u), std::move(w.m), std::move(w.v)};
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
  SmithResult r = smith_normal_form(m);
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out.push_back(r.s.at(i, i));
  return out;
}

// --- Row-space membership -------------------------------------------------

namespace {

struct Overflow {};

using I128 = __int128;

I128 checked_add(I128 a, I128 b) {
  I128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
I128 checked_sub(I128 a, I128 b) {
  I128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
I128 checked_mul(I128 a, I128 b) {
  I128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
I128 gcd128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void primitivize(std::vector<I128>& v) {
  I128 g = 0;
  for (const auto& x : v) {
    g = gcd128(g, x);
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : v) x /= g;
}

void primitivize(std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& x : v) x /= g;
}

// Echelon rows over Q with integer entries: each stored row is primitive,
// pivot columns strictly increasing.
template <class T>
struct Echelon {
  std::vector<std::vector<T>> rows;   // echelon rows
  std::vector<std::size_t> pivot_col;

  void build(std::vector<std::vector<T>> input) {
    if (input.empty()) return;
    std::size_t ncols = input.front().size();
    std::size_t next = 0;
    for (std::size_t col = 0; col < ncols && next < input.size(); ++col) {
      std::size_t chosen = next;
      while (chosen < input.size() && input[chosen][col] == 0) ++chosen;
      if (chosen == input.size()) continue;
      std::swap(input[next], input[chosen]);
      primitivize(input[next]);
      const std::vector<T>& prow = input[next];
      for (std::size_t i = next + 1; i < input.size(); ++i) {
        if (input[i][col] == 0) continue;
        eliminate(input[i], prow, col);
      }
      pivot_col.push_back(col);
      ++next;
    }
    input.resize(next);
    rows = std::move(input);
  }

  // row <- pivot * row - row[col] * prow, then primitivize.
  static void eliminate(std::vector<T>& row, const std::vector<T>& prow, std::size_t col);

  bool contains(std::vector<T> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t c = pivot_col[r];
      if (v[c] == 0) continue;
      eliminate(v, rows[r], c);
    }
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
};

template <>
void Echelon<I128>::eliminate(std::vector<I128>& row, const std::vector<I128>& prow,
                              std::size_t col) {
  I128 p = prow[col];
  I128 f = row[col];
  for (std::size_t j = 0; j < row.size(); ++j)
    row[j] = checked_sub(checked_mul(p, row[j]), checked_mul(f, prow[j]));
  primitivize(row);
}

template <>
void Echelon<Int>::eliminate(std::vector<Int>& row, const std::vector<Int>& prow,
                             std::size_t col) {
  Int p = prow[col];
  Int f = row[col];
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = p * row[j] - f * prow[j];
  primitivize(row);
}

bool fits_long_long(const Int& x) {
  return x <= std::numeric_limits<long long>::max() && x >= std::numeric_limits<long long>::min();
}

std::vector<std::vector<Int>> to_big_rows(const IntMatrix& m) {
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

}  // namespace

struct RowSpace::Impl {
  bool fast = false;
  Echelon<I128> fast_echelon;
  Echelon<Int> big_echelon;
  bool big_built = false;
  IntMatrix original{0, 0};

  void ensure_big() {
    if (big_built) return;
    big_echelon.build(to_big_rows(original));
    big_built = true;
  }
};

RowSpace::RowSpace(const IntMatrix& m) : impl_(std::make_unique<Impl>()) {
  impl_->original = m;
  bool small_entries = true;
  for (std::size_t i = 0; i < m.rows() && small_entries; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!fits_long_long(m.at(i, j))) {
        small_entries = false;
        break;
      }
  if (small_entries) {
    try {
      std::vector<std::vector<I128>> rows(m.rows(), std::vector<I128>(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          rows[i][j] = static_cast<I128>(static_cast<long long>(m.at(i, j)));
      impl_->fast_echelon.build(std::move(rows));
      impl_->fast = true;
      return;
    } catch (const Overflow&) {
      impl_->fast_echelon = {};
    }
  }
  impl_->ensure_big();
}

RowSpace::~RowSpace() = default;
RowSpace::RowSpace(RowSpace&&) noexcept = default;
RowSpace& RowSpace::operator=(RowSpace&&) noexcept = default;

std::size_t RowSpace::rank() const {
  return impl_->fast ? impl_->fast_echelon.rows.size() : impl_->big_echelon.rows.size();
}

bool RowSpace::contains(const std::vector<Int>& vec) const {
  if (vec.size() != impl_->original.cols())
    throw std::invalid_argument("RowSpace: vector length mismatch");
  if (impl_->fast) {
    try {
      std::vector<I128> v(vec.size());
      for (std::size_t i = 0; i < vec.size(); ++i) {
        if (!fits_long_long(vec[i])) throw Overflow{};
        v[i] = static_cast<I128>(static_cast<long long>(vec[i]));
      }
      return impl_->fast_echelon.contains(std::move(v));
    } catch (const Overflow&) {
      impl_->ensure_big();
    }
  } else {
    impl_->ensure_big();
  }
  return impl_->big_echelon.contains(vec);
}

bool forces_zero(const IntMatrix& m, const std::vector<std::size_t>& targets) {
  for (auto t : targets)
    if (t >= m.cols()) throw std::out_of_range("forces_zero: column index out of range");
  RowSpace space(m);
  for (auto t : targets) {
    std::vector<Int> e(m.cols(), Int(0));
    e[t] = 1;
    if (!space.contains(e)) return false;
  }
  return true;
}

std::vector<std::vector<Rational>> rational_kernel_basis(const IntMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> work(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) work[i][j] = Rational(m.at(i, j));
  // RREF over Q.
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows; ++col) {
    std::size_t chosen = next;
    while (chosen < rows && work[chosen][col] == 0) ++chosen;
    if (chosen == rows) continue;
    std::swap(work[next], work[chosen]);
    Rational inv = Rational(1) / work[next][col];
    for (std::size_t j = col; j < cols; ++j) work[next][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == next || work[i][col] == 0) continue;
      Rational f = work[i][col];
      for (std::size_t j = col; j < cols; ++j) work[i][j] -= f * work[next][j];
    }
    pivots.push_back(col);
    ++next;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -work[p][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace vucert
