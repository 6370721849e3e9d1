#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vucert/forcing.hpp"
#include "vucert/presentation.hpp"
#include "vucert/triangularize.hpp"

namespace vucert {

/// The presentation a representation file binds to: case, genus data and the
/// gluing matrix.
struct PresentationBinding {
  GraphCase kind;
  Int genus;
  std::optional<Int> genus2;
  GluingMatrix gluing;

  Presentation presentation() const {
    return build_presentation(kind, genus, genus2, gluing);
  }
};

/// Explicit matrix representation over a cyclotomic field: one invertible
/// n x n image per generator symbol. Immutable after construction.
class Representation {
 public:
  Representation(FieldPtr field, std::size_t dimension,
                 std::map<std::string, FieldMatrix> images,
                 std::optional<PresentationBinding> binding = std::nullopt);

  const FieldPtr& field() const { return field_; }
  std::size_t dimension() const { return dimension_; }
  const std::map<std::string, FieldMatrix>& images() const { return images_; }
  const std::optional<PresentationBinding>& binding() const { return binding_; }

  bool has_image(const std::string& symbol) const { return images_.count(symbol) > 0; }
  /// Throws std::invalid_argument for a symbol with no image.
  const FieldMatrix& image_of(const std::string& symbol) const;

 private:
  FieldPtr field_;
  std::size_t dimension_;
  std::map<std::string, FieldMatrix> images_;
  std::optional<PresentationBinding> binding_;
};

/// Parses the JSON representation document:
///   {"field": {"conductor": m}, "dimension": n, "case": "loop"|"edge",
///    "genus": g, "genus2": g' (edge only), "gluing": [a,b,c,d],
///    "generators": {symbol: matrix}}
/// with matrix an n x n array of entries and each entry an array of phi(m)
/// rational strings. Validates shapes, field membership, invertibility, and
/// that the generator set matches the bound presentation exactly. Throws
/// std::invalid_argument with a one-line diagnostic on any violation.
Representation parse_representation(const std::string& text);

/// Canonical serialization; parse -> serialize -> parse is the identity and
/// serialize is byte-stable on canonical input.
std::string serialize_representation(const Representation& rep);

struct RelationFailure {
  std::string label;
  std::string residue;  // rendered image of the relator word
};

struct RelationReport {
  bool pass = false;
  std::vector<RelationFailure> failures;
};

/// Evaluates every relator exactly; passes iff each is the identity matrix.
/// Throws std::invalid_argument when the generator sets differ.
RelationReport verify_relations(const Representation& rep, const Presentation& pres);

/// Virtual-unipotence verdict for one matrix (or one word's image).
struct VUReport {
  Word word;
  CycloPoly char_poly;
  RatPoly norm_poly;
  /// Sorted cyclotomic indices with norm = prod Phi_d, when that holds.
  std::optional<std::vector<Int>> cyclotomic_multiset;
  bool verdict = false;
  /// lcm of the multiset: (image)^witness_order is unipotent.
  std::optional<Int> witness_order;
};

/// All eigenvalues of p roots of unity? Decided by cyclotomic peeling of the
/// rational norm of the characteristic polynomial, cross-checked against the
/// independent Kronecker-style divisibility oracle on every call (the two
/// must agree or std::logic_error is thrown). A norm with a nontrivial
/// denominator has non-algebraic-integer roots and is rejected outright.
/// Throws std::domain_error on singular input.
VUReport is_vu_matrix(const FieldMatrix& p);

FieldMatrix evaluate_word(const Representation& rep, const Word& word);

/// Evaluates the word exactly and delegates to is_vu_matrix.
VUReport analyze_word(const Representation& rep, const Word& word);

struct CellData {
  std::size_t r, s;
  CycloNumber mu;
  /// lamp_s * (lam_r^a * mu^b)^-1, verified to be a root of unity.
  CycloNumber residue;
  Int residue_order;
};

struct BlockData {
  BlockPattern pattern;
  std::vector<CycloNumber> fiber_eigenvalues;    // of the image of f
  std::vector<CycloNumber> partner_eigenvalues;  // of the image of f' (loop: t f t^-1)
  std::vector<CellData> cells;
  TriangularizedTriple triple;
};

/// Extracts the joint block layout of (rho(f), rho(f'), rho(z)) for a
/// verified representation: discovers the eigenvalues (they must lie in the
/// field), refines the layout cell by cell, and reads one mu candidate per
/// occupied cell off the triangularized z image, checking each residue
/// against the gluing exponents. Throws FieldTooSmallError when eigenvalues
/// fall outside the field and std::invalid_argument when the relation check
/// fails.
BlockData extract_block_data(const Representation& rep, const Presentation& pres);

}  // namespace vucert
