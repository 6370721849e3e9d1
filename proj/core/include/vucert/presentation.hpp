#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vucert/gluing.hpp"
#include "vucert/matrix.hpp"

namespace vucert {

/// Freely reduced word in named generators: adjacent factors carry distinct
/// symbols and every exponent is nonzero. The empty word is the identity.
class Word {
 public:
  using Factor = std::pair<std::string, Int>;

  Word() = default;
  /// Normalizes: merges adjacent equal symbols and drops zero exponents.
  explicit Word(std::vector<Factor> factors);

  static Word from_symbol(const std::string& symbol, const Int& exponent = Int(1));

  /// Syntax: factors joined by '*', each `sym` or `sym^int`, no whitespace.
  /// Example: t*f*t^-1*z^-1*f^-3
  static std::optional<Word> parse(const std::string& text);
  std::string to_string() const;

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
};

/// w^-1 v^-1 w v for symbols w, v.
Word commutator(const std::string& x, const std::string& y);

struct Relator {
  std::string label;  // e.g. "(3)" or "(2:x1,f)"
  Word word;          // the word required to equal the identity
};

/// One of the two fundamental-group presentations, with the gluing exponents
/// substituted. Relators are stored as left-hand side times inverted
/// right-hand side of the defining equalities, in a fixed arrangement.
struct Presentation {
  GraphCase kind;
  Int genus;
  std::optional<Int> genus2;  // edge only
  GluingMatrix gluing;
  std::vector<std::string> generators;
  std::vector<Relator> relators;

  bool has_generator(const std::string& symbol) const;
};

/// Loop case (genus g >= 0): generators x1,y1,...,xg,yg,z,zp,f,t and the
/// 2g+4 relators of the self-glued block. Edge case (g, g' >= 1): generators
/// x1,...,yg,z,f,xp1,...,ypg',zp,fp and the 2g+2g'+4 relators of the
/// two-block gluing. Throws std::invalid_argument on bad genus.
Presentation build_presentation(GraphCase kind, const Int& genus, std::optional<Int> genus2,
                                const GluingMatrix& gluing);

struct AbelianizedGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion_divisors;  // entries > 1, divisibility chain
  std::vector<std::string> generators;
  /// Change of basis: coordinates of a generator-exponent vector in the
  /// diagonalized quotient are projection * vector.
  IntMatrix projection{0, 0};
  /// Diagonal of the relation lattice in those coordinates (0 on free
  /// coordinates beyond the lattice rank).
  std::vector<Int> diagonal;

  /// Coordinates of an exponent vector, torsion coordinates reduced into
  /// [0, d).
  std::vector<Int> image_of(const std::vector<Int>& exponents) const;
  bool is_torsion_image(const std::vector<Int>& coords) const;
};

struct AbelianImage {
  std::vector<Int> coords;
  bool is_torsion = false;
};

/// First homology of the presented group with the image of a word: the
/// quotient of the free abelian group on the generators by the abelianized
/// relators, diagonalized by Smith reduction. A certificate word must land
/// in the torsion part; this is the cheap consistency oracle for
/// certificates. Throws std::invalid_argument on a symbol outside the
/// presentation.
std::pair<AbelianizedGroup, AbelianImage> abelianization_image(const Presentation& pres,
                                                               const Word& word);

/// Raised by certificate_words when the stated hypotheses fail; the message
/// names the violated hypothesis.
struct HypothesisError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The certified virtually-unipotent words for a gluing matrix.
/// Loop (requires det = -1, b != 0, a - d >= 2): f^(a-1) z^b.
/// Edge (requires a >= 1 and b, c, d >= 0): z when c = 0; f when c > 0,
/// d = 0; both f and z when c > 0 and d > 0.
std::vector<Word> certificate_words(const GluingMatrix& m);

}  // namespace vucert
