#include "vucert/matrix.hpp"

#include <stdexcept>

namespace vucert {

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, CycloNumber::zero(field_)) {}

FieldMatrix::FieldMatrix(FieldPtr field, std::size_t rows, std::size_t cols,
                         std::vector<CycloNumber> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("FieldMatrix: entry count must equal rows*cols");
  for (const auto& e : entries_)
    if (e.field()->conductor() != field_->conductor())
      throw std::invalid_argument("FieldMatrix: entry from a different field");
}

FieldMatrix FieldMatrix::identity(const FieldPtr& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, CycloNumber::one(field));
  return m;
}

FieldMatrix FieldMatrix::from_columns(const FieldPtr& field,
                                      const std::vector<FieldVector>& columns) {
  if (columns.empty()) return FieldMatrix(field, 0, 0);
  std::size_t n = columns.front().size();
  FieldMatrix m(field, n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw std::invalid_argument("from_columns: ragged columns");
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

void FieldMatrix::set(std::size_t i, std::size_t j, CycloNumber value) {
  if (value.field()->conductor() != field_->conductor())
    throw std::invalid_argument("FieldMatrix: entry from a different field");
  entries_[i * cols_ + j] = std::move(value);
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (a.entries_[i] != b.entries_[i]) return false;
  return true;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("FieldMatrix: shape mismatch in addition");
  FieldMatrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("FieldMatrix: shape mismatch in subtraction");
  FieldMatrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("FieldMatrix: shape mismatch in product");
  FieldMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNumber& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.set(i, j, out.at(i, j) + aik * b.at(k, j));
      }
    }
  return out;
}

FieldMatrix operator*(const CycloNumber& s, const FieldMatrix& a) {
  FieldMatrix out(a.field_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = s * a.entries_[i];
  return out;
}

FieldVector FieldMatrix::apply(const FieldVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("FieldMatrix: vector length mismatch");
  FieldVector out(rows_, CycloNumber::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + at(i, j) * v[j];
  return out;
}

FieldMatrix FieldMatrix::pow(const Int& exponent) const {
  if (!is_square()) throw std::invalid_argument("FieldMatrix: power of a non-square matrix");
  if (exponent < 0) return inverse().pow(-exponent);
  FieldMatrix base = *this;
  FieldMatrix acc = identity(field_, rows_);
  Int e = exponent;
  while (e > 0) {
    if (e % 2 == 1) acc = acc * base;
    base = base * base;
    e /= 2;
  }
  return acc;
}

FieldMatrix FieldMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("FieldMatrix: inverse of a non-square matrix");
  std::size_t n = rows_;
  // Augmented Gauss-Jordan.
  std::vector<FieldVector> aug(n, FieldVector(2 * n, CycloNumber::zero(field_)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = at(i, j);
    aug[i][n + i] = CycloNumber::one(field_);
  }
  auto pivots = rref_in_place(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= pivots.size() || pivots[i] != i) throw std::domain_error("FieldMatrix: singular matrix");
  FieldMatrix out(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, aug[i][n + j]);
  return out;
}

bool FieldMatrix::is_invertible() const {
  return is_square() && rank(*this) == rows_;
}

bool FieldMatrix::commutes_with(const FieldMatrix& other) const {
  return *this * other == other * *this;
}

FieldMatrix FieldMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw std::invalid_argument("FieldMatrix: submatrix out of range");
  FieldMatrix out(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out.set(i, j, at(row0 + i, col0 + j));
  return out;
}

CycloPoly char_poly(const FieldMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
  const FieldPtr& field = m.field();
  std::size_t n = m.rows();
  // Leverrier(-Faddeev): M_k = M (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
  std::vector<CycloNumber> cs;  // c_1 .. c_n
  FieldMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      FieldMatrix shifted = mk;
      for (std::size_t i = 0; i < n; ++i) shifted.set(i, i, shifted.at(i, i) + cs.back());
      mk = m * shifted;
    }
    CycloNumber trace = CycloNumber::zero(field);
    for (std::size_t i = 0; i < n; ++i) trace = trace + mk.at(i, i);
    cs.push_back(Rational(-1, static_cast<long>(k)) * trace);
  }
  std::vector<CycloNumber> coeffs(n + 1, CycloNumber::zero(field));
  coeffs[n] = CycloNumber::one(field);
  for (std::size_t k = 1; k <= n; ++k) coeffs[n - k] = cs[k - 1];
  return CycloPoly{field, std::move(coeffs)};
}

std::vector<std::size_t> rref_in_place(std::vector<FieldVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  std::size_t ncols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    std::size_t chosen = pivot_row;
    while (chosen < rows.size() && rows[chosen][col].is_zero()) ++chosen;
    if (chosen == rows.size()) continue;
    std::swap(rows[pivot_row], rows[chosen]);
    CycloNumber inv = rows[pivot_row][col].inverse();
    for (std::size_t j = col; j < ncols; ++j) rows[pivot_row][j] = inv * rows[pivot_row][j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col].is_zero()) continue;
      CycloNumber factor = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = rows[i][j] - factor * rows[pivot_row][j];
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

namespace {

std::vector<FieldVector> matrix_rows(const FieldMatrix& m) {
  std::vector<FieldVector> rows(m.rows(), FieldVector());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
  }
  return rows;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  auto rows = matrix_rows(m);
  return rref_in_place(rows).size();
}

std::vector<FieldVector> kernel_basis(const FieldMatrix& m) {
  auto rows = matrix_rows(m);
  auto pivots = rref_in_place(rows);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<FieldVector> basis;
  const FieldPtr& field = m.field();
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    FieldVector v(m.cols(), CycloNumber::zero(field));
    v[free_col] = CycloNumber::one(field);
    for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -rows[p][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<FieldVector> generalized_eigenspace(const FieldMatrix& m, const CycloNumber& lambda) {
  if (!m.is_square()) throw std::invalid_argument("generalized_eigenspace: matrix must be square");
  FieldMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted.set(i, i, shifted.at(i, i) - lambda);
  return kernel_basis(shifted.pow(Int(static_cast<long>(m.rows()))));
}

FieldMatrix restrict_to_subspace(const FieldMatrix& m, const std::vector<FieldVector>& basis) {
  std::size_t u = basis.size();
  std::size_t n = m.rows();
  if (u == 0) return FieldMatrix(m.field(), 0, 0);
  // Solve B X = M B columnwise; the augmented RREF must pivot exactly on
  // the basis columns.
  std::vector<FieldVector> aug(n, FieldVector(u + u, CycloNumber::zero(m.field())));
  for (std::size_t j = 0; j < u; ++j) {
    if (basis[j].size() != n) throw std::invalid_argument("restrict_to_subspace: bad basis vector");
    FieldVector image = m.apply(basis[j]);
    for (std::size_t i = 0; i < n; ++i) {
      aug[i][j] = basis[j][i];
      aug[i][u + j] = image[i];
    }
  }
  auto pivots = rref_in_place(aug);
  for (std::size_t j = 0; j < u; ++j)
    if (j >= pivots.size() || pivots[j] != j)
      throw std::invalid_argument("restrict_to_subspace: basis is linearly dependent");
  if (pivots.size() != u)
    throw std::invalid_argument("restrict_to_subspace: subspace is not invariant");
  FieldMatrix out(m.field(), u, u);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j) out.set(i, j, aug[i][u + j]);
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count must equal rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix work = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (work.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && work.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(work.at(k, j), work.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int value = work.at(i, j) * work.at(k, k) - work.at(i, k) * work.at(k, j);
        work.at(i, j) = value / prev;  // Bareiss: division is exact
      }
    prev = work.at(k, k);
  }
  Int det = work.at(n - 1, n - 1);
  return sign < 0 ? Int(-det) : det;
}

}  // namespace vucert
