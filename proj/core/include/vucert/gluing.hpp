#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vucert/rational.hpp"

namespace vucert {

/// Which shape of torus gluing a matrix describes: a single block glued to
/// itself (loop) or two blocks glued along the torus (edge).
enum class GraphCase { Loop, Edge };

std::string to_string(GraphCase c);

/// 2x2 integer gluing matrix (a b; c d) with |det| = 1 and b != 0, tagged
/// with its case. Freshly ingested matrices straight off an oriented
/// manifold have det = -1; normalization moves may flip the sign.
struct GluingMatrix {
  Int a, b, c, d;
  GraphCase kind;

  Int det() const { return a * d - b * c; }
};

/// Validates |det| = 1 and b != 0; throws std::invalid_argument otherwise.
GluingMatrix make_gluing(GraphCase kind, const Int& a, const Int& b, const Int& c, const Int& d);

/// Presentation-preserving moves on a gluing matrix. Row/column negations
/// apply to the edge case only; inversion applies to both.
enum class GluingMove { Invert, NegateRow1, NegateRow2, NegateCol1, NegateCol2 };

std::string to_string(GluingMove move);
GluingMatrix apply_move(const GluingMatrix& m, GluingMove move);

struct NormalizeResult {
  /// Absent exactly when npc_no_normal_form is set (edge case, a = d = 0).
  std::optional<GluingMatrix> matrix;
  std::vector<GluingMove> moves;
  /// Edge case with a = d = 0: the manifold is NPC and there is no
  /// certificate normal form to produce.
  bool npc_no_normal_form = false;
  /// Loop case: whether a - d >= 2 holds after the applied moves. The
  /// inversion move preserves a - d when det = -1, so the flag can be false.
  bool loop_gap_achieved = false;
};

/// Edge case: reaches a >= 1 and a, b, c, d >= 0 via inversion (when a = 0,
/// d != 0) followed by sign moves. Loop case: applies at most an inversion
/// and reports whether a - d >= 2 was achieved. The move list replays from
/// the input to the output.
NormalizeResult normalize_gluing(const GluingMatrix& m);

/// The nonpositive-curvature criterion, as a pure function of the stated
/// entries: edge iff a = d = 0, loop iff |a - d| >= 2.
bool npc_check(const GluingMatrix& m);

}  // namespace vucert
