#include <doctest.h>

#include <sstream>

#include "rfeq/formats.hpp"

using namespace rfeq;

namespace {

Presentation parse_pres(const std::string& text) {
  std::istringstream in(text);
  return read_presentation(in, "test.pres");
}

ProductSubgroup parse_sub(const std::string& text) {
  std::istringstream in(text);
  return read_subgroup(in, "test.sub");
}

std::string what_of_pres(const std::string& text) {
  try {
    parse_pres(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("presentation files round trip") {
  Presentation p = parse_pres(
      "# a comment\n"
      "gens a b\n"
      "rel a^-1 b^-1 a b  # trailing comment\n"
      "rel a^3\n"
      "\n");
  CHECK(p.generators().names() == std::vector<std::string>{"a", "b"});
  REQUIRE(p.relators().size() == 2);
  CHECK(p.relators()[0] == parse_word(p.generators(), "a^-1 b^-1 a b"));

  std::ostringstream out;
  write_presentation(out, p);
  CHECK(parse_pres(out.str()) == p);
  std::ostringstream again;
  write_presentation(again, parse_pres(out.str()));
  CHECK(again.str() == out.str());
}

TEST_CASE("presentation file errors carry file and line") {
  CHECK(what_of_pres("rel a\n") == "test.pres:1: rel before gens line");
  CHECK(what_of_pres("gens a\nblah\n").find("test.pres:2:") == 0);
  CHECK(what_of_pres("gens a a\n").find("duplicate generator") !=
        std::string::npos);
  CHECK(what_of_pres("gens a\nrel c\n").find("unknown generator") !=
        std::string::npos);
  CHECK(what_of_pres("").find("missing gens") != std::string::npos);
}

TEST_CASE("subgroup files round trip") {
  ProductSubgroup ps = parse_sub(
      "# diagonal-ish\n"
      "factor free a b\n"
      "factor abelian x y\n"
      "gen a | x\n"
      "gen b a^-1 | 1\n"
      "gen 1 | y x y\n");
  CHECK(ps.factors().size() == 2);
  CHECK(ps.factors()[0].kind == FactorKind::free_group);
  CHECK(ps.factors()[1].kind == FactorKind::free_abelian);
  CHECK(ps.names().names() == std::vector<std::string>{"s1", "s2", "s3"});
  // abelian components are normalized at construction
  CHECK(ps.generators()[2].components[1] ==
        parse_word(ps.factors()[1].generators, "x y^2"));

  std::ostringstream out;
  write_subgroup(out, ps);
  CHECK(parse_sub(out.str()) == ps);
}

TEST_CASE("subgroup file errors") {
  CHECK_THROWS_AS(parse_sub("gen a\n"), ParseError);
  CHECK_THROWS_AS(parse_sub("factor weird a\n"), ParseError);
  CHECK_THROWS_AS(parse_sub("factor free a\nfactor free b\ngen a\n"),
                  ParseError);  // wrong component count
  CHECK_THROWS_AS(parse_sub("factor free a\ngen a |\n"), ParseError);
  CHECK_THROWS_AS(parse_sub(""), ParseError);
  CHECK_THROWS_AS(parse_sub("factor free a\ngen b\n"), ParseError);
}
