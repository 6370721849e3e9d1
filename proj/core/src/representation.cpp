#include "vucert/representation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace vucert {

using ordered_json = nlohmann::ordered_json;

Representation::Representation(FieldPtr field, std::size_t dimension,
                               std::map<std::string, FieldMatrix> images,
                               std::optional<PresentationBinding> binding)
    : field_(std::move(field)),
      dimension_(dimension),
      images_(std::move(images)),
      binding_(std::move(binding)) {
  for (const auto& [symbol, matrix] : images_) {
    if (matrix.rows() != dimension_ || matrix.cols() != dimension_)
      throw std::invalid_argument("Representation: image of '" + symbol + "' has the wrong shape");
    if (matrix.field()->conductor() != field_->conductor())
      throw std::invalid_argument("Representation: image of '" + symbol +
                                  "' lives in a different field");
    if (!matrix.is_invertible())
      throw std::invalid_argument("Representation: image of '" + symbol + "' is singular");
  }
}

const FieldMatrix& Representation::image_of(const std::string& symbol) const {
  auto it = images_.find(symbol);
  if (it == images_.end())
    throw std::invalid_argument("Representation: unknown generator '" + symbol + "'");
  return it->second;
}

namespace {

Int json_to_int(const ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw std::invalid_argument(std::string("representation file: ") + what +
                              " must be an integer");
}

long long int_to_ll(const Int& value, const char* what) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min())
    throw std::invalid_argument(std::string("representation file: ") + what +
                                " out of serializable range");
  return value.convert_to<long long>();
}

}  // namespace

Representation parse_representation(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("representation file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("representation file: top level must be an object");
  for (const char* key : {"field", "dimension", "case", "genus", "gluing", "generators"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("representation file: missing key '") + key + "'");

  if (!doc["field"].is_object() || !doc["field"].contains("conductor"))
    throw std::invalid_argument("representation file: field must carry a conductor");
  Int conductor = json_to_int(doc["field"]["conductor"], "conductor");
  if (conductor < 1) throw std::invalid_argument("representation file: conductor must be positive");
  FieldPtr field = CycloField::get(conductor);
  std::size_t phi = field->degree();

  Int dim_value = json_to_int(doc["dimension"], "dimension");
  if (dim_value < 1) throw std::invalid_argument("representation file: dimension must be positive");
  std::size_t n = static_cast<std::size_t>(dim_value);

  std::string case_name = doc["case"].get<std::string>();
  GraphCase kind;
  if (case_name == "loop")
    kind = GraphCase::Loop;
  else if (case_name == "edge")
    kind = GraphCase::Edge;
  else
    throw std::invalid_argument("representation file: case must be \"loop\" or \"edge\"");

  Int genus = json_to_int(doc["genus"], "genus");
  std::optional<Int> genus2;
  if (kind == GraphCase::Edge) {
    if (!doc.contains("genus2"))
      throw std::invalid_argument("representation file: edge case requires genus2");
    genus2 = json_to_int(doc["genus2"], "genus2");
  } else if (doc.contains("genus2")) {
    throw std::invalid_argument("representation file: loop case must not carry genus2");
  }

  if (!doc["gluing"].is_array() || doc["gluing"].size() != 4)
    throw std::invalid_argument("representation file: gluing must be [a,b,c,d]");
  GluingMatrix gluing = make_gluing(kind, json_to_int(doc["gluing"][0], "gluing entry"),
                                    json_to_int(doc["gluing"][1], "gluing entry"),
                                    json_to_int(doc["gluing"][2], "gluing entry"),
                                    json_to_int(doc["gluing"][3], "gluing entry"));
  PresentationBinding binding{kind, genus, genus2, gluing};
  Presentation pres = binding.presentation();

  if (!doc["generators"].is_object())
    throw std::invalid_argument("representation file: generators must be an object");
  std::map<std::string, FieldMatrix> images;
  for (const auto& [symbol, matrix_json] : doc["generators"].items()) {
    if (!pres.has_generator(symbol))
      throw std::invalid_argument("representation file: unknown generator symbol '" + symbol +
                                  "'");
    if (!matrix_json.is_array() || matrix_json.size() != n)
      throw std::invalid_argument("representation file: image of '" + symbol + "' must be " +
                                  std::to_string(n) + " rows");
    std::vector<CycloNumber> entries;
    entries.reserve(n * n);
    for (const auto& row : matrix_json) {
      if (!row.is_array() || row.size() != n)
        throw std::invalid_argument("representation file: image of '" + symbol +
                                    "' must be square");
      for (const auto& entry : row) {
        if (!entry.is_array() || entry.size() != phi)
          throw std::invalid_argument("representation file: entry of '" + symbol + "' must have " +
                                      std::to_string(phi) + " coordinates");
        std::vector<Rational> coeffs;
        coeffs.reserve(phi);
        for (const auto& coord : entry) {
          if (!coord.is_string())
            throw std::invalid_argument("representation file: coordinates must be rational strings");
          auto parsed = parse_rational(coord.get<std::string>());
          if (!parsed)
            throw std::invalid_argument("representation file: malformed rational '" +
                                        coord.get<std::string>() + "'");
          coeffs.push_back(*parsed);
        }
        entries.emplace_back(field, std::move(coeffs));
      }
    }
    images.emplace(symbol, FieldMatrix(field, n, n, std::move(entries)));
  }
  for (const auto& symbol : pres.generators)
    if (!images.count(symbol))
      throw std::invalid_argument("representation file: missing generator image '" + symbol + "'");

  return Representation(field, n, std::move(images), binding);
}

std::string serialize_representation(const Representation& rep) {
  if (!rep.binding())
    throw std::invalid_argument("serialize_representation: representation has no presentation binding");
  const PresentationBinding& binding = *rep.binding();
  ordered_json doc;
  doc["field"] = ordered_json{{"conductor", int_to_ll(rep.field()->conductor(), "conductor")}};
  doc["dimension"] = rep.dimension();
  doc["case"] = to_string(binding.kind);
  doc["genus"] = int_to_ll(binding.genus, "genus");
  if (binding.kind == GraphCase::Edge) doc["genus2"] = int_to_ll(*binding.genus2, "genus2");
  doc["gluing"] = {int_to_ll(binding.gluing.a, "gluing entry"),
                   int_to_ll(binding.gluing.b, "gluing entry"),
                   int_to_ll(binding.gluing.c, "gluing entry"),
                   int_to_ll(binding.gluing.d, "gluing entry")};
  ordered_json generators = ordered_json::object();
  for (const auto& [symbol, matrix] : rep.images()) {  // std::map: sorted symbols
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < matrix.cols(); ++j) {
        ordered_json entry = ordered_json::array();
        for (const auto& coeff : matrix.at(i, j).coeffs()) entry.push_back(format_rational(coeff));
        row.push_back(std::move(entry));
      }
      rows.push_back(std::move(row));
    }
    generators[symbol] = std::move(rows);
  }
  doc["generators"] = std::move(generators);
  return doc.dump();
}

RelationReport verify_relations(const Representation& rep, const Presentation& pres) {
  for (const auto& symbol : pres.generators)
    if (!rep.has_image(symbol))
      throw std::invalid_argument("verify_relations: no image for generator '" + symbol + "'");
  for (const auto& [symbol, matrix] : rep.images())
    if (!pres.has_generator(symbol))
      throw std::invalid_argument("verify_relations: extra generator '" + symbol + "'");

  RelationReport report;
  FieldMatrix id = FieldMatrix::identity(rep.field(), rep.dimension());
  for (const auto& relator : pres.relators) {
    FieldMatrix value = evaluate_word(rep, relator.word);
    if (value != id) {
      std::ostringstream os;
      os << "image of " << relator.word.to_string();
      report.failures.push_back({relator.label, os.str()});
    }
  }
  report.pass = report.failures.empty();
  return report;
}

FieldMatrix evaluate_word(const Representation& rep, const Word& word) {
  FieldMatrix acc = FieldMatrix::identity(rep.field(), rep.dimension());
  for (const auto& [symbol, exponent] : word.factors())
    acc = acc * rep.image_of(symbol).pow(exponent);
  return acc;
}

VUReport is_vu_matrix(const FieldMatrix& p) {
  if (!p.is_square()) throw std::invalid_argument("is_vu_matrix: matrix must be square");
  if (!p.is_invertible()) throw std::domain_error("is_vu_matrix: matrix is singular");

  VUReport report;
  report.char_poly = char_poly(p);
  report.norm_poly = galois_norm(report.char_poly);

  auto [monic, scale] = scale_to_monic_integer(report.norm_poly);
  auto multiset = is_cyclotomic_product(monic);
  bool kronecker = kronecker_oracle(monic);
  if (multiset.has_value() != kronecker)
    throw std::logic_error("is_vu_matrix: cyclotomic peeling and Kronecker oracle disagree");
  // A denominator in the norm scales the roots: eigenvalues are then not
  // algebraic integers, hence not roots of unity.
  report.verdict = scale == 1 && multiset.has_value();
  if (report.verdict) {
    std::sort(multiset->begin(), multiset->end());
    Int order = 1;
    for (const Int& d : *multiset) order = lcm(order, d);
    report.cyclotomic_multiset = std::move(*multiset);
    report.witness_order = order;
  }
  return report;
}

VUReport analyze_word(const Representation& rep, const Word& word) {
  VUReport report = is_vu_matrix(evaluate_word(rep, word));
  report.word = word;
  return report;
}

BlockData extract_block_data(const Representation& rep, const Presentation& pres) {
  RelationReport relations = verify_relations(rep, pres);
  if (!relations.pass)
    throw std::invalid_argument("extract_block_data: relation check failed at relator " +
                                relations.failures.front().label);
  GraphCase kind = pres.kind;
  const FieldMatrix& f = rep.image_of("f");
  FieldMatrix z = rep.image_of("z");
  FieldMatrix fp = kind == GraphCase::Loop
                       ? rep.image_of("t") * f * rep.image_of("t").inverse()
                       : rep.image_of("fp");

  std::vector<CycloNumber> eigs_f = field_eigenvalue_search(f);
  // Loop: f' is conjugate to f, so the same eigenvalue list keeps the grid
  // indices aligned and the row/column sums matched.
  std::vector<CycloNumber> eigs_fp = kind == GraphCase::Loop ? eigs_f : field_eigenvalue_search(fp);

  auto completeness = [&](const FieldMatrix& m, const std::vector<CycloNumber>& eigs,
                          const char* label) {
    std::size_t total = 0;
    for (const auto& ev : eigs) total += generalized_eigenspace(m, ev).size();
    if (total != m.rows())
      throw FieldTooSmallError(std::string("extract_block_data: eigenvalues of ") + label +
                               " lie outside the field; enlarge the conductor");
  };
  completeness(f, eigs_f, "the fiber image");
  completeness(fp, eigs_fp, "the conjugate fiber image");

  TriangularizedTriple triple = simultaneous_block_triangularize(f, fp, z, eigs_f, eigs_fp);

  BlockData data{make_pattern(kind, triple.layout.dims), eigs_f, eigs_fp, {}, triple};
  for (std::size_t r = 0; r < eigs_f.size(); ++r)
    for (std::size_t s = 0; s < eigs_fp.size(); ++s) {
      std::size_t u = triple.layout.dims[r][s];
      if (u == 0) continue;
      std::size_t offset = triple.layout.cell_offset(r, s);
      CycloNumber mu = triple.q.at(offset, offset);
      CycloNumber residue =
          eigs_fp[s] * (eigs_f[r].pow(pres.gluing.a) * mu.pow(pres.gluing.b)).inverse();
      auto order = residue.root_of_unity_order();
      if (!order)
        throw std::logic_error(
            "extract_block_data: cell residue is not a root of unity; the block data is "
            "inconsistent with the gluing exponents");
      data.cells.push_back(CellData{r, s, mu, residue, *order});
    }
  return data;
}

}  // namespace vucert
