#include "vucert/triangularize.hpp"

#include <algorithm>
#include <set>

namespace vucert {

std::size_t BlockLayout::cell_offset(std::size_t r, std::size_t s) const {
  std::size_t offset = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    for (std::size_t j = 0; j < dims[i].size(); ++j) {
      if (i == r && j == s) return offset;
      offset += dims[i][j];
    }
  throw std::out_of_range("BlockLayout: cell index out of range");
}

namespace {

std::size_t leading_index(const FieldVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  throw std::invalid_argument("leading_index: zero vector");
}

FieldVector normalize_leading(const FieldVector& v) {
  std::size_t lead = leading_index(v);
  CycloNumber inv = v[lead].inverse();
  FieldVector out(v.size(), CycloNumber::zero(v[lead].field()));
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = inv * v[i];
  return out;
}

FieldVector lift(const std::vector<FieldVector>& basis, const FieldVector& coords,
                 const FieldPtr& field, std::size_t ambient_dim) {
  FieldVector out(ambient_dim, CycloNumber::zero(field));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim; ++j) out[j] = out[j] + coords[i] * basis[i][j];
  }
  return out;
}

FieldMatrix shifted(const FieldMatrix& m, const CycloNumber& lambda) {
  FieldMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, i, out.at(i, i) - lambda);
  return out;
}

// One common eigenvector of a commuting triple on a block where p has sole
// eigenvalue lambda and p_prime sole eigenvalue lambda_prime. Among the
// kernel-basis candidates the one with the smallest leading nonzero
// coordinate is chosen, normalized to leading coefficient 1.
FieldVector common_eigenvector(const FieldMatrix& p, const CycloNumber& lambda,
                               const FieldMatrix& p_prime, const CycloNumber& lambda_prime,
                               const FieldMatrix& q) {
  const FieldPtr& field = p.field();
  std::size_t n = p.rows();

  std::vector<FieldVector> v1 = kernel_basis(shifted(p, lambda));
  if (v1.empty()) throw std::logic_error("common_eigenvector: block eigenvalue missing");

  FieldMatrix pp_restricted = restrict_to_subspace(p_prime, v1);
  std::vector<FieldVector> v2_coords =
      kernel_basis(shifted(pp_restricted, lambda_prime));
  if (v2_coords.empty()) throw std::logic_error("common_eigenvector: refinement eigenvalue missing");
  std::vector<FieldVector> v2;
  v2.reserve(v2_coords.size());
  for (const auto& c : v2_coords) v2.push_back(lift(v1, c, field, n));

  FieldMatrix q_restricted = restrict_to_subspace(q, v2);
  std::vector<FieldVector> v3;
  if (q_restricted.rows() == 1) {
    v3.push_back(v2.front());
  } else {
    for (const CycloNumber& mu : field_eigenvalue_search(q_restricted)) {
      std::vector<FieldVector> coords = kernel_basis(shifted(q_restricted, mu));
      if (coords.empty()) continue;
      for (const auto& c : coords) v3.push_back(lift(v2, c, field, n));
      break;
    }
  }
  if (v3.empty())
    throw FieldTooSmallError(
        "common-eigenvector extraction found no eigenvalue of the third matrix in the field; "
        "enlarge the conductor");

  std::size_t best = 0;
  for (std::size_t i = 1; i < v3.size(); ++i)
    if (leading_index(v3[i]) < leading_index(v3[best])) best = i;
  return normalize_leading(v3[best]);
}

// Conjugator T with T^-1 A T upper triangular for each of the commuting
// block matrices, by deflation along common eigenvectors.
FieldMatrix triangularize_block(const FieldMatrix& p, const CycloNumber& lambda,
                                const FieldMatrix& p_prime, const CycloNumber& lambda_prime,
                                const FieldMatrix& q) {
  const FieldPtr& field = p.field();
  std::size_t n = p.rows();
  if (n <= 1) return FieldMatrix::identity(field, n);

  FieldVector v = common_eigenvector(p, lambda, p_prime, lambda_prime, q);
  std::size_t lead = leading_index(v);

  // Basis: v first, then the standard vectors other than e_lead.
  std::vector<FieldVector> columns;
  columns.push_back(v);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == lead) continue;
    FieldVector e(n, CycloNumber::zero(field));
    e[j] = CycloNumber::one(field);
    columns.push_back(std::move(e));
  }
  FieldMatrix s = FieldMatrix::from_columns(field, columns);
  FieldMatrix s_inv = s.inverse();

  FieldMatrix rp = s_inv * p * s;
  FieldMatrix rpp = s_inv * p_prime * s;
  FieldMatrix rq = s_inv * q * s;

  FieldMatrix sub = triangularize_block(rp.submatrix(1, 1, n - 1, n - 1), lambda,
                                        rpp.submatrix(1, 1, n - 1, n - 1), lambda_prime,
                                        rq.submatrix(1, 1, n - 1, n - 1));
  FieldMatrix t = FieldMatrix::identity(field, n);
  for (std::size_t i = 0; i < n - 1; ++i)
    for (std::size_t j = 0; j < n - 1; ++j) t.set(i + 1, j + 1, sub.at(i, j));
  return s * t;
}

void check_distinct(const std::vector<CycloNumber>& values, const char* label) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        throw std::invalid_argument(std::string(label) + ": eigenvalue list has a repeat");
}

bool is_upper_triangular(const FieldMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i && j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TriangularizedTriple simultaneous_block_triangularize(
    const FieldMatrix& p, const FieldMatrix& p_prime, const FieldMatrix& q,
    const std::vector<CycloNumber>& eigs_p, const std::vector<CycloNumber>& eigs_p_prime) {
  if (!p.is_square() || p.rows() != p_prime.rows() || p.rows() != q.rows() ||
      !p_prime.is_square() || !q.is_square())
    throw std::invalid_argument("simultaneous_block_triangularize: shapes must agree");
  if (!p.commutes_with(p_prime) || !p.commutes_with(q) || !p_prime.commutes_with(q))
    throw std::invalid_argument("simultaneous_block_triangularize: matrices must pairwise commute");
  check_distinct(eigs_p, "simultaneous_block_triangularize");
  check_distinct(eigs_p_prime, "simultaneous_block_triangularize");

  const FieldPtr& field = p.field();
  std::size_t n = p.rows();
  std::size_t k = eigs_p.size(), l = eigs_p_prime.size();

  // Stage one: generalized eigenspaces of p, with completeness checks.
  std::vector<std::vector<FieldVector>> w(k);
  std::size_t total = 0;
  for (std::size_t r = 0; r < k; ++r) {
    w[r] = generalized_eigenspace(p, eigs_p[r]);
    total += w[r].size();
  }
  if (total != n)
    throw FieldTooSmallError(
        "eigenvalue list of the first matrix is incomplete in the field; enlarge the conductor");
  {
    std::size_t check = 0;
    for (const auto& ev : eigs_p_prime) check += generalized_eigenspace(p_prime, ev).size();
    if (check != n)
      throw FieldTooSmallError(
          "eigenvalue list of the second matrix is incomplete in the field; enlarge the conductor");
  }

  // Stage two: refine each part by p_prime.
  std::vector<std::vector<std::size_t>> dims(k, std::vector<std::size_t>(l, 0));
  std::vector<FieldVector> new_basis;
  new_basis.reserve(n);
  for (std::size_t r = 0; r < k; ++r) {
    FieldMatrix pp_r = restrict_to_subspace(p_prime, w[r]);
    std::size_t covered = 0;
    for (std::size_t s = 0; s < l; ++s) {
      auto cell_coords = generalized_eigenspace(pp_r, eigs_p_prime[s]);
      dims[r][s] = cell_coords.size();
      covered += cell_coords.size();
      for (const auto& c : cell_coords) new_basis.push_back(lift(w[r], c, field, n));
    }
    if (covered != w[r].size())
      throw FieldTooSmallError(
          "refinement eigenvalues are incomplete inside a generalized eigenspace; enlarge the "
          "conductor");
  }

  FieldMatrix c_inv = FieldMatrix::from_columns(field, new_basis);
  FieldMatrix c = c_inv.inverse();
  FieldMatrix bp = c * p * c_inv;
  FieldMatrix bpp = c * p_prime * c_inv;
  FieldMatrix bq = c * q * c_inv;

  // Stage three: upper-triangularize each commuting cell triple.
  BlockLayout layout{eigs_p, eigs_p_prime, dims, c};
  std::size_t offset = 0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < l; ++s) {
      std::size_t u = dims[r][s];
      if (u == 0) continue;
      FieldMatrix t = triangularize_block(bp.submatrix(offset, offset, u, u), eigs_p[r],
                                          bpp.submatrix(offset, offset, u, u), eigs_p_prime[s],
                                          bq.submatrix(offset, offset, u, u));
      FieldMatrix t_inv = t.inverse();
      // Fold diag(..., T^-1, ...) into the global conjugator.
      FieldMatrix d = FieldMatrix::identity(field, n);
      FieldMatrix d_inv = FieldMatrix::identity(field, n);
      for (std::size_t i = 0; i < u; ++i)
        for (std::size_t j = 0; j < u; ++j) {
          d.set(offset + i, offset + j, t_inv.at(i, j));
          d_inv.set(offset + i, offset + j, t.at(i, j));
        }
      layout.conjugator = d * layout.conjugator;
      bp = d * bp * d_inv;
      bpp = d * bpp * d_inv;
      bq = d * bq * d_inv;
      offset += u;
    }

  // Every cell of each conjugated matrix must now be upper triangular with
  // the declared sole eigenvalue on the diagonal.
  offset = 0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < l; ++s) {
      std::size_t u = dims[r][s];
      if (u == 0) continue;
      FieldMatrix cell_p = bp.submatrix(offset, offset, u, u);
      FieldMatrix cell_pp = bpp.submatrix(offset, offset, u, u);
      FieldMatrix cell_q = bq.submatrix(offset, offset, u, u);
      if (!is_upper_triangular(cell_p) || !is_upper_triangular(cell_pp) ||
          !is_upper_triangular(cell_q))
        throw std::logic_error("simultaneous_block_triangularize: cell is not upper triangular");
      for (std::size_t i = 0; i < u; ++i)
        if (cell_p.at(i, i) != eigs_p[r] || cell_pp.at(i, i) != eigs_p_prime[s])
          throw std::logic_error("simultaneous_block_triangularize: wrong diagonal eigenvalue");
      offset += u;
    }

  return TriangularizedTriple{std::move(layout), std::move(bp), std::move(bpp), std::move(bq)};
}

std::vector<CycloNumber> field_eigenvalue_search(const FieldMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("field_eigenvalue_search: matrix must be square");
  const FieldPtr& field = m.field();
  CycloPoly cp = char_poly(m);

  std::vector<CycloNumber> found;
  auto consider = [&](const CycloNumber& candidate) {
    for (const auto& f : found)
      if (f == candidate) return;
    if (cp.evaluate(candidate).is_zero()) found.push_back(candidate);
  };

  // Degree one: the root is explicit.
  if (cp.degree() == 1) {
    consider(-cp.coeffs[0]);
    return found;
  }
  // Scalar matrices: the shared diagonal value is the sole eigenvalue.
  {
    bool scalar = true;
    for (std::size_t i = 0; i < m.rows() && scalar; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (i == j ? m.at(i, j) != m.at(0, 0) : !m.at(i, j).is_zero()) {
          scalar = false;
          break;
        }
    if (scalar) {
      consider(m.at(0, 0));
      return found;
    }
  }

  for (const CycloNumber& u : roots_of_unity_in(field)) consider(u);

  // Rational candidates against the rational norm of the characteristic
  // polynomial (a rational root of the norm fixed by every automorphism is
  // a root of cp itself).
  RatPoly norm = galois_norm(cp);
  std::set<Rational> rational_candidates;
  constexpr long kSmallBound = 64;
  for (long num = -kSmallBound; num <= kSmallBound; ++num)
    for (long den = 1; den <= 12; ++den) rational_candidates.insert(Rational(num, den));
  // Divisor pairs of the norm's outer coefficients, when small enough to
  // enumerate.
  IntPoly cleared;
  {
    Int scale = 1;
    for (const auto& c : norm.coeffs()) scale = lcm(scale, denominator(c));
    std::vector<Int> v;
    for (const auto& c : norm.coeffs()) v.push_back(numerator(c * Rational(scale)));
    cleared = IntPoly(std::move(v));
  }
  std::size_t low = 0;
  while (low < static_cast<std::size_t>(cleared.degree() + 1) && cleared.coeff(low) == 0) ++low;
  if (low > 0) rational_candidates.insert(Rational(0));
  static const Int kDivisorLimit = Int(1000000000);
  if (!cleared.is_zero() && low <= static_cast<std::size_t>(cleared.degree())) {
    Int constant = cleared.coeff(low);
    Int leading = cleared.leading();
    Int abs_constant = constant < 0 ? Int(-constant) : constant;
    Int abs_leading = leading < 0 ? Int(-leading) : leading;
    if (abs_constant <= kDivisorLimit && abs_leading <= kDivisorLimit) {
      for (const Int& num : divisors(abs_constant))
        for (const Int& den : divisors(abs_leading)) {
          rational_candidates.insert(Rational(num, den));
          rational_candidates.insert(Rational(-num, den));
        }
    }
  }
  for (const Rational& cand : rational_candidates) {
    if (norm.evaluate(cand) != 0) continue;
    consider(CycloNumber::from_rational(field, cand));
  }
  return found;
}

}  // namespace vucert
