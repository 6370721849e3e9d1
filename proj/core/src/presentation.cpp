#include "vucert/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vucert/smith.hpp"

namespace vucert {

Word::Word(std::vector<Factor> factors) {
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
      if (factors_.back().second == 0) factors_.pop_back();
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

Word Word::from_symbol(const std::string& symbol, const Int& exponent) {
  return Word({{symbol, exponent}});
}

std::optional<Word> Word::parse(const std::string& text) {
  if (text.empty()) return Word();
  std::vector<Factor> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_'))
      ++pos;
    if (pos == start || !std::isalpha(static_cast<unsigned char>(text[start])))
      return std::nullopt;
    std::string symbol = text.substr(start, pos - start);
    Int exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t estart = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == estart || (text[estart] == '-' && pos == estart + 1)) return std::nullopt;
      exponent = Int(text.substr(estart, pos - estart));
      if (exponent == 0) return std::nullopt;
    }
    factors.emplace_back(std::move(symbol), exponent);
    if (pos < text.size()) {
      if (text[pos] != '*') return std::nullopt;
      ++pos;
      if (pos == text.size()) return std::nullopt;  // trailing '*'
    }
  }
  return Word(std::move(factors));
}

std::string Word::to_string() const {
  if (factors_.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (const auto& [symbol, exponent] : factors_) {
    if (!first) os << "*";
    os << symbol;
    if (exponent != 1) os << "^" << exponent;
    first = false;
  }
  return os.str();
}

Word Word::inverse() const {
  std::vector<Factor> factors;
  factors.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    factors.emplace_back(it->first, -it->second);
  return Word(std::move(factors));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Word::Factor> factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return Word(std::move(factors));
}

Word commutator(const std::string& x, const std::string& y) {
  return Word({{x, 1}, {y, 1}, {x, -1}, {y, -1}});
}

bool Presentation::has_generator(const std::string& symbol) const {
  return std::find(generators.begin(), generators.end(), symbol) != generators.end();
}

namespace {

// Inverse of the product of commutators [x1,y1]...[xg,yg].
Word inverse_commutator_product(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Word w;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it)
    w = w * commutator(it->first, it->second).inverse();
  return w;
}

}  // namespace

Presentation build_presentation(GraphCase kind, const Int& genus, std::optional<Int> genus2,
                                const GluingMatrix& gluing) {
  if (gluing.kind != kind) throw std::invalid_argument("build_presentation: case mismatch");
  Presentation pres{kind, genus, genus2, gluing, {}, {}};
  const Int& a = gluing.a;
  const Int& b = gluing.b;
  const Int& c = gluing.c;
  const Int& d = gluing.d;

  if (kind == GraphCase::Loop) {
    if (genus < 0) throw std::invalid_argument("build_presentation: loop genus must be >= 0");
    if (genus2) throw std::invalid_argument("build_presentation: loop case has a single genus");
    long g = static_cast<long>(genus);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (long i = 1; i <= g; ++i) {
      pres.generators.push_back("x" + std::to_string(i));
      pres.generators.push_back("y" + std::to_string(i));
      pairs.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
    }
    pres.generators.insert(pres.generators.end(), {"z", "zp", "f", "t"});

    // (1) z zp = prod [xi, yi]
    pres.relators.push_back(
        {"(1)", Word({{"z", 1}, {"zp", 1}}) * inverse_commutator_product(pairs)});
    // (2) [xi, f] = [yi, f] = [z, f] = 1
    for (long i = 1; i <= g; ++i) {
      pres.relators.push_back(
          {"(2:x" + std::to_string(i) + ",f)", commutator("x" + std::to_string(i), "f")});
      pres.relators.push_back(
          {"(2:y" + std::to_string(i) + ",f)", commutator("y" + std::to_string(i), "f")});
    }
    pres.relators.push_back({"(2:z,f)", commutator("z", "f")});
    // (3) t f t^-1 = f^a z^b
    pres.relators.push_back(
        {"(3)", Word({{"t", 1}, {"f", 1}, {"t", -1}, {"z", -b}, {"f", -a}})});
    // (4) t zp t^-1 = f^c z^d
    pres.relators.push_back(
        {"(4)", Word({{"t", 1}, {"zp", 1}, {"t", -1}, {"z", -d}, {"f", -c}})});
    return pres;
  }

  if (genus < 1 || !genus2 || *genus2 < 1)
    throw std::invalid_argument("build_presentation: edge case needs both genera >= 1");
  long g = static_cast<long>(genus);
  long gp = static_cast<long>(*genus2);
  std::vector<std::pair<std::string, std::string>> pairs, pairs_p;
  for (long i = 1; i <= g; ++i) {
    pres.generators.push_back("x" + std::to_string(i));
    pres.generators.push_back("y" + std::to_string(i));
    pairs.emplace_back("x" + std::to_string(i), "y" + std::to_string(i));
  }
  pres.generators.insert(pres.generators.end(), {"z", "f"});
  for (long i = 1; i <= gp; ++i) {
    pres.generators.push_back("xp" + std::to_string(i));
    pres.generators.push_back("yp" + std::to_string(i));
    pairs_p.emplace_back("xp" + std::to_string(i), "yp" + std::to_string(i));
  }
  pres.generators.insert(pres.generators.end(), {"zp", "fp"});

  // (I) z = prod [xi, yi]
  pres.relators.push_back({"(I)", Word({{"z", 1}}) * inverse_commutator_product(pairs)});
  // (II) [xi, f] = [yi, f] = 1
  for (long i = 1; i <= g; ++i) {
    pres.relators.push_back(
        {"(II:x" + std::to_string(i) + ",f)", commutator("x" + std::to_string(i), "f")});
    pres.relators.push_back(
        {"(II:y" + std::to_string(i) + ",f)", commutator("y" + std::to_string(i), "f")});
  }
  // (III) zp = prod [xpi, ypi]
  pres.relators.push_back({"(III)", Word({{"zp", 1}}) * inverse_commutator_product(pairs_p)});
  // (IV) [xpi, fp] = [ypi, fp] = 1
  for (long i = 1; i <= gp; ++i) {
    pres.relators.push_back(
        {"(IV:xp" + std::to_string(i) + ",fp)", commutator("xp" + std::to_string(i), "fp")});
    pres.relators.push_back(
        {"(IV:yp" + std::to_string(i) + ",fp)", commutator("yp" + std::to_string(i), "fp")});
  }
  // (V) fp = f^a z^b
  pres.relators.push_back({"(V)", Word({{"fp", 1}, {"z", -b}, {"f", -a}})});
  // (VI) zp = f^c z^d
  pres.relators.push_back({"(VI)", Word({{"zp", 1}, {"z", -d}, {"f", -c}})});
  return pres;
}

std::vector<Int> AbelianizedGroup::image_of(const std::vector<Int>& exponents) const {
  if (exponents.size() != generators.size())
    throw std::invalid_argument("AbelianizedGroup: exponent vector length mismatch");
  std::vector<Int> coords(generators.size(), Int(0));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (exponents[i] == 0) continue;
    for (std::size_t j = 0; j < generators.size(); ++j)
      coords[j] += projection.at(j, i) * exponents[i];
  }
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j < diagonal.size() && diagonal[j] != 0) {
      coords[j] %= diagonal[j];
      if (coords[j] < 0) coords[j] += diagonal[j];
    }
  }
  return coords;
}

bool AbelianizedGroup::is_torsion_image(const std::vector<Int>& coords) const {
  for (std::size_t j = 0; j < coords.size(); ++j) {
    bool torsion_coord = j < diagonal.size() && diagonal[j] != 0;
    if (!torsion_coord && coords[j] != 0) return false;
  }
  return true;
}

std::pair<AbelianizedGroup, AbelianImage> abelianization_image(const Presentation& pres,
                                                               const Word& word) {
  std::size_t n = pres.generators.size();
  auto index_of = [&](const std::string& symbol) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (pres.generators[i] == symbol) return i;
    throw std::invalid_argument("abelianization_image: unknown generator '" + symbol + "'");
  };

  // Columns of the relation map are the abelianized relators.
  IntMatrix relation_map(n, pres.relators.size());
  for (std::size_t j = 0; j < pres.relators.size(); ++j)
    for (const auto& [symbol, exponent] : pres.relators[j].word.factors())
      relation_map.at(index_of(symbol), j) += exponent;

  SmithResult snf = smith_normal_form(relation_map);
  AbelianizedGroup group;
  group.generators = pres.generators;
  group.projection = snf.u;
  group.diagonal.assign(std::min(n, pres.relators.size()), Int(0));
  std::size_t lattice_rank = 0;
  for (std::size_t i = 0; i < group.diagonal.size(); ++i) {
    group.diagonal[i] = snf.s.at(i, i);
    if (group.diagonal[i] != 0) {
      ++lattice_rank;
      if (group.diagonal[i] > 1) group.torsion_divisors.push_back(group.diagonal[i]);
    }
  }
  group.free_rank = n - lattice_rank;

  std::vector<Int> exponents(n, Int(0));
  for (const auto& [symbol, exponent] : word.factors()) exponents[index_of(symbol)] += exponent;
  AbelianImage image;
  image.coords = group.image_of(exponents);
  image.is_torsion = group.is_torsion_image(image.coords);
  return {std::move(group), std::move(image)};
}

std::vector<Word> certificate_words(const GluingMatrix& m) {
  if (m.kind == GraphCase::Loop) {
    if (m.det() != -1)
      throw HypothesisError("loop certificate requires det B = -1 (got " + m.det().str() + ")");
    if (m.a - m.d < 2)
      throw HypothesisError("loop certificate requires a - d >= 2 (got " + Int(m.a - m.d).str() +
                            ")");
    return {Word({{"f", m.a - 1}, {"z", m.b}})};
  }
  if (m.a < 1) throw HypothesisError("edge certificate requires normalized a >= 1");
  if (m.b < 1 || m.c < 0 || m.d < 0)
    throw HypothesisError("edge certificate requires normalized b >= 1 and c, d >= 0");
  if (m.c == 0) return {Word::from_symbol("z")};
  if (m.d == 0) return {Word::from_symbol("f")};
  return {Word::from_symbol("f"), Word::from_symbol("z")};
}

}  // namespace vucert
