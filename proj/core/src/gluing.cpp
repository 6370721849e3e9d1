#include "vucert/gluing.hpp"

#include <stdexcept>

namespace vucert {

std::string to_string(GraphCase c) { return c == GraphCase::Loop ? "loop" : "edge"; }

GluingMatrix make_gluing(GraphCase kind, const Int& a, const Int& b, const Int& c, const Int& d) {
  Int det = a * d - b * c;
  if (det != 1 && det != -1)
    throw std::invalid_argument("gluing matrix must have determinant +1 or -1");
  if (b == 0) throw std::invalid_argument("gluing matrix must have b != 0");
  return GluingMatrix{a, b, c, d, kind};
}

std::string to_string(GluingMove move) {
  switch (move) {
    case GluingMove::Invert: return "invert";
    case GluingMove::NegateRow1: return "negate-row-1";
    case GluingMove::NegateRow2: return "negate-row-2";
    case GluingMove::NegateCol1: return "negate-col-1";
    case GluingMove::NegateCol2: return "negate-col-2";
  }
  return "?";
}

GluingMatrix apply_move(const GluingMatrix& m, GluingMove move) {
  switch (move) {
    case GluingMove::Invert: {
      Int det = m.det();
      // det-scaled adjugate; det is +1 or -1
      return GluingMatrix{m.d * det, -m.b * det, -m.c * det, m.a * det, m.kind};
    }
    case GluingMove::NegateRow1:
      return GluingMatrix{-m.a, -m.b, m.c, m.d, m.kind};
    case GluingMove::NegateRow2:
      return GluingMatrix{m.a, m.b, -m.c, -m.d, m.kind};
    case GluingMove::NegateCol1:
      return GluingMatrix{-m.a, m.b, -m.c, m.d, m.kind};
    case GluingMove::NegateCol2:
      return GluingMatrix{m.a, -m.b, m.c, -m.d, m.kind};
  }
  throw std::logic_error("apply_move: unreachable");
}

NormalizeResult normalize_gluing(const GluingMatrix& input) {
  NormalizeResult result;
  GluingMatrix m = input;

  if (m.kind == GraphCase::Loop) {
    // Only inversion is available. With det = -1 it maps (a, d) to (-d, -a)
    // and preserves a - d; with det = +1 it swaps a and d.
    if (m.a - m.d < 2 && m.det() == 1 && m.d - m.a >= 2) {
      m = apply_move(m, GluingMove::Invert);
      result.moves.push_back(GluingMove::Invert);
    }
    result.loop_gap_achieved = m.a - m.d >= 2;
    result.matrix = m;
    return result;
  }

  if (m.a == 0 && m.d == 0) {
    result.npc_no_normal_form = true;
    return result;
  }
  auto push = [&](GluingMove move) {
    m = apply_move(m, move);
    result.moves.push_back(move);
  };
  if (m.a == 0) push(GluingMove::Invert);
  if (m.a < 0) push(GluingMove::NegateRow1);
  if (m.b < 0) push(GluingMove::NegateCol2);
  if (m.c < 0 || m.d < 0) push(GluingMove::NegateRow2);
  if (m.a < 1 || m.b < 1 || m.c < 0 || m.d < 0)
    throw std::logic_error("normalize_gluing: sign moves failed to reach the normal form");
  result.matrix = m;
  return result;
}

bool npc_check(const GluingMatrix& m) {
  if (m.kind == GraphCase::Edge) return m.a == 0 && m.d == 0;
  Int gap = m.a - m.d;
  if (gap < 0) gap = -gap;
  return gap >= 2;
}

}  // namespace vucert
