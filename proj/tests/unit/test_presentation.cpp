#include <doctest.h>

#include "vucert/presentation.hpp"

using namespace vucert;

TEST_CASE("word normalization and syntax") {
  Word w({{"f", 2}, {"f", -2}, {"z", 1}});
  CHECK(w == Word::from_symbol("z"));

  Word parsed = *Word::parse("t*f*t^-1*z^-1*f^-3");
  CHECK(parsed.to_string() == "t*f*t^-1*z^-1*f^-3");
  CHECK(*Word::parse("f^2*z") == Word({{"f", 2}, {"z", 1}}));
  CHECK(Word::parse("")->empty());
  CHECK(!Word::parse("f^0"));
  CHECK(!Word::parse("f**z"));
  CHECK(!Word::parse("f^"));
  CHECK(!Word::parse("2f"));
  CHECK(!Word::parse("f *z"));

  CHECK((parsed * parsed.inverse()).empty());
  CHECK(commutator("x", "y").to_string() == "x*y*x^-1*y^-1");
}

TEST_CASE("loop presentation shape") {
  GluingMatrix b = make_gluing(GraphCase::Loop, 3, 1, 4, 1);
  Presentation pres = build_presentation(GraphCase::Loop, 1, std::nullopt, b);
  CHECK(pres.generators == std::vector<std::string>({"x1", "y1", "z", "zp", "f", "t"}));
  CHECK(pres.relators.size() == 6);  // 2g + 4
  CHECK(pres.relators[0].label == "(1)");
  // relator (3) in the fixed arrangement: t f t^-1 z^-b f^-a
  CHECK(pres.relators[4].label == "(3)");
  CHECK(pres.relators[4].word.to_string() == "t*f*t^-1*z^-1*f^-3");
  CHECK(pres.relators[5].word.to_string() == "t*zp*t^-1*z^-1*f^-4");

  // genus zero: relation (1) degenerates to z zp
  Presentation sphere = build_presentation(GraphCase::Loop, 0, std::nullopt, b);
  CHECK(sphere.generators == std::vector<std::string>({"z", "zp", "f", "t"}));
  CHECK(sphere.relators.size() == 4);
  CHECK(sphere.relators[0].word.to_string() == "z*zp");

  Presentation genus2 = build_presentation(GraphCase::Loop, 2, std::nullopt, b);
  CHECK(genus2.relators.size() == 8);  // 2g + 4
  CHECK_THROWS_AS(build_presentation(GraphCase::Loop, -1, std::nullopt, b),
                  std::invalid_argument);
}

TEST_CASE("edge presentation shape") {
  GluingMatrix b = make_gluing(GraphCase::Edge, 1, 1, 1, 0);
  Presentation pres = build_presentation(GraphCase::Edge, 1, Int(1), b);
  CHECK(pres.generators ==
        std::vector<std::string>({"x1", "y1", "z", "f", "xp1", "yp1", "zp", "fp"}));
  CHECK(pres.relators.size() == 8);  // 2g + 2g' + 4
  CHECK(pres.relators[6].label == "(V)");
  CHECK(pres.relators[6].word.to_string() == "fp*z^-1*f^-1");
  CHECK(pres.relators[7].word.to_string() == "zp*f^-1");

  CHECK_THROWS_AS(build_presentation(GraphCase::Edge, 0, Int(1), b), std::invalid_argument);
  CHECK_THROWS_AS(build_presentation(GraphCase::Edge, 1, std::nullopt, b),
                  std::invalid_argument);

  GluingMatrix bigger = make_gluing(GraphCase::Edge, 2, 1, 1, 1);
  CHECK(build_presentation(GraphCase::Edge, 2, Int(3), bigger).relators.size() == 14);
}

TEST_CASE("abelianization of the loop example") {
  GluingMatrix b = make_gluing(GraphCase::Loop, 3, 1, 4, 1);
  Presentation pres = build_presentation(GraphCase::Loop, 1, std::nullopt, b);
  auto [group, image] = abelianization_image(pres, *Word::parse("f^2*z"));
  CHECK(group.free_rank == 4);
  CHECK(group.torsion_divisors.empty());
  CHECK(image.is_torsion);
  for (const auto& c : image.coords) CHECK(c == 0);

  auto [group2, image2] = abelianization_image(pres, Word::from_symbol("t"));
  CHECK(!image2.is_torsion);
}

TEST_CASE("abelianization of the edge example") {
  GluingMatrix b = make_gluing(GraphCase::Edge, 1, 1, 1, 0);
  Presentation pres = build_presentation(GraphCase::Edge, 1, Int(1), b);
  auto [group, image] = abelianization_image(pres, Word::from_symbol("f"));
  CHECK(group.free_rank == 4);
  CHECK(image.is_torsion);
  for (const auto& c : image.coords) CHECK(c == 0);

  auto [g2, empty_image] = abelianization_image(pres, Word());
  CHECK(empty_image.is_torsion);
  for (const auto& c : empty_image.coords) CHECK(c == 0);

  CHECK_THROWS_AS(abelianization_image(pres, Word::from_symbol("nope")), std::invalid_argument);
}

TEST_CASE("certificate words") {
  CHECK(certificate_words(make_gluing(GraphCase::Loop, 3, 1, 4, 1)) ==
        std::vector<Word>{*Word::parse("f^2*z")});
  CHECK(certificate_words(make_gluing(GraphCase::Edge, 1, 3, 0, 1)) ==
        std::vector<Word>{Word::from_symbol("z")});
  CHECK(certificate_words(make_gluing(GraphCase::Edge, 1, 1, 1, 0)) ==
        std::vector<Word>{Word::from_symbol("f")});
  CHECK(certificate_words(make_gluing(GraphCase::Edge, 2, 1, 1, 1)) ==
        std::vector<Word>({Word::from_symbol("f"), Word::from_symbol("z")}));

  // a = 1 loop certificate degenerates to a power of z
  CHECK(certificate_words(make_gluing(GraphCase::Loop, 1, 2, 0, -1)) ==
        std::vector<Word>{*Word::parse("z^2")});

  CHECK_THROWS_AS(certificate_words(make_gluing(GraphCase::Loop, 1, 1, 0, 1)), HypothesisError);
  CHECK_THROWS_AS(certificate_words(make_gluing(GraphCase::Loop, 1, 1, 2, 3)), HypothesisError);
  CHECK_THROWS_AS(certificate_words(make_gluing(GraphCase::Edge, 0, 1, 1, 0)), HypothesisError);
  CHECK_THROWS_AS(certificate_words(make_gluing(GraphCase::Edge, 1, -1, 0, -1)), HypothesisError);
}

TEST_CASE("certificates are torsion in homology on a sample window") {
  for (long a = -4; a <= 4; ++a)
    for (long b = 1; b <= 2; ++b)
      for (long c = -4; c <= 4; ++c)
        for (long d = -4; d <= 4; ++d) {
          if (a * d - b * c != -1 || a - d < 2) continue;
          GluingMatrix m = make_gluing(GraphCase::Loop, a, b, c, d);
          for (long genus = 0; genus <= 2; ++genus) {
            Presentation pres = build_presentation(GraphCase::Loop, genus, std::nullopt, m);
            for (const Word& w : certificate_words(m)) {
              auto [group, image] = abelianization_image(pres, w);
              CHECK(image.is_torsion);
              for (const auto& coord : image.coords) CHECK(coord == 0);
            }
          }
        }
}
