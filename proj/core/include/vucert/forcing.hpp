#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vucert/gluing.hpp"
#include "vucert/matrix.hpp"

namespace vucert {

/// Grid of joint generalized-eigenspace block dimensions. Loop patterns are
/// k x k with matching row and column sums (all positive); edge patterns are
/// k x l with every row sum and every column sum positive.
struct BlockPattern {
  GraphCase kind;
  std::vector<std::vector<std::size_t>> dims;

  std::size_t row_count() const { return dims.size(); }
  std::size_t col_count() const { return dims.empty() ? 0 : dims.front().size(); }
  std::size_t total() const;
  std::size_t row_sum(std::size_t r) const;
  std::size_t col_sum(std::size_t s) const;
};

/// Validates the case invariants; throws std::invalid_argument.
BlockPattern make_pattern(GraphCase kind, std::vector<std::vector<std::size_t>> dims);

/// Rows separated by ';', entries by ',' — e.g. "1,1;1,1".
std::optional<std::vector<std::vector<std::size_t>>> parse_pattern_grid(const std::string& text);
std::string format_pattern_grid(const std::vector<std::vector<std::size_t>>& dims);

/// Homogeneous integer system in the named eigenvalue-logarithm variables:
/// lam_r for the fiber image, lamp_s additionally in the edge case, and
/// mu_r_s for each occupied cell. One row per defining relation, tagged
/// with its provenance; rebuilding from (B, N) reproduces the system.
struct IntLinearSystem {
  std::vector<std::string> variables;
  IntMatrix matrix{0, 0};
  std::vector<std::string> provenance;

  std::size_t var_index(const std::string& name) const;
};

/// Loop: per occupied cell the conjugation relation
///   lam_s - a lam_r - b mu_r_s = 0,
/// plus per r the block-determinant relation
///   sum_s ( n[r][s] mu_r_s + n[s][r] (c lam_s + d mu_s_r) ) = 0.
/// Edge: per occupied cell  a lam_r + b mu_r_s - lamp_s = 0, plus per r
///   sum_s n[r][s] mu_r_s = 0, plus per s  sum_r n[r][s] (c lam_r + d mu_r_s) = 0.
IntLinearSystem build_system(const GluingMatrix& gluing, const BlockPattern& pattern);

enum class ForcingOutcome { ForcedVU, Decomposable, NotForced, HypothesisViolated };
std::string to_string(ForcingOutcome outcome);

/// An integer linear form over the system variables, with a rendered name.
struct LinearForm {
  std::vector<Int> coeffs;
  std::string name;
};

struct ForcingVerdict {
  ForcingOutcome outcome = ForcingOutcome::HypothesisViolated;
  std::vector<LinearForm> forced_targets;
  std::vector<std::string> trace;
  bool oracle_confirmed = false;
};

/// Verdict of the loop forcing argument for det B = -1, b != 0, |a-d| >= 2.
/// Disconnected support (r ~ s iff n[r][s] + n[s][r] > 0) is Decomposable.
/// Connected support with a - d >= 2 runs the greatest-value argument, and
/// every target (a-1) lam_r + b mu_r_s is confirmed by the kernel oracle
/// before ForcedVU is returned; a disagreement throws std::logic_error.
/// Connected support with a - d <= -2 is decided by the oracle alone (the
/// greatest-value argument needs a - d >= 2) and may come back NotForced.
ForcingVerdict check_forcing_loop(const GluingMatrix& gluing, const BlockPattern& pattern);

/// Verdict of the edge forcing arguments for normalized B (a >= 1, b >= 1,
/// c, d >= 0, |det| = 1). c = 0: the row/column peeling induction forces
/// every occupied mu. c > 0: the nonpositive-discriminant quadratic form
/// forces every lam, and additionally every occupied mu when d > 0. All
/// targets are oracle-confirmed; a disagreement throws std::logic_error.
ForcingVerdict check_forcing_edge(const GluingMatrix& gluing, const BlockPattern& pattern);

/// The signed quantity (det B - 3bc) * a * d controlling the quadratic-form
/// step, with the certified claim attached: for a, b, c >= 1, d >= 0 and
/// |det B| = 1 the value is <= 0, strictly negative exactly when d > 0.
struct DiscriminantReport {
  Int value;
  bool nonpositive = false;
  bool strictly_negative = false;
  /// Whether the hypotheses of the certified claim hold for this matrix.
  bool claim_applies = false;
};

DiscriminantReport discriminant_audit(const GluingMatrix& gluing);

/// Oracle-side augmentation: one auxiliary variable and defining row per
/// target form; returns the augmented matrix and the auxiliary column
/// indices, so forces_zero can decide membership of the forms.
std::pair<IntMatrix, std::vector<std::size_t>> augment_with_targets(
    const IntLinearSystem& system, const std::vector<LinearForm>& targets);

}  // namespace vucert
