#include <doctest.h>

#include "classic/kb.hpp"
#include "classic/random.hpp"
#include "classic/syntax.hpp"

using namespace classic;

namespace {

KnowledgeBase roles_and_attrs() {
  KnowledgeBase kb;
  kb.roles = {"participants", "r"};
  kb.attributes = {"coach", "captain", "father", "friend"};
  kb.individuals = {"Alice", "Bob"};
  return kb;
}

}  // namespace

TEST_CASE("conjunction with a number restriction") {
  const Description d = parse_description("and(GAME, at-least(4, participants))");
  CHECK(d == dl::conj({dl::atom("GAME"), dl::at_least(4, "participants")}));
}

TEST_CASE("three-conjunct description with a coreference chain") {
  const Description d =
      parse_description("and(GAME, all(participants, PERSON), same-as((coach),(captain,father)))", roles_and_attrs());
  const Description expected = dl::conj({dl::atom("GAME"), dl::all_role("participants", dl::atom("PERSON")),
                                         dl::same_as({"coach"}, {"captain", "father"})});
  CHECK(d == expected);
}

TEST_CASE("undeclared names are resolved by use") {
  const auto ds = parse_descriptions({"all(p, A)", "at-least(1, p)", "all(q, A)", "same-as((q), (z))"});
  CHECK(ds[0].as<ast::All>()->kind == PropertyKind::Role);
  CHECK(ds[2].as<ast::All>()->kind == PropertyKind::Attribute);
  CHECK_THROWS_AS(parse_descriptions({"at-least(1, q)", "same-as((q), (z))"}), ParseError);
}

TEST_CASE("builtins, host concepts and host values") {
  CHECK(parse_description("THING") == dl::thing());
  CHECK(parse_description("classic-thing") == dl::classic_thing());
  CHECK(parse_description("nothing") == dl::nothing());
  CHECK(parse_description("INTEGER") == dl::host("INTEGER"));
  const Description o = parse_description("one-of(1, 2.5, \"a \\\"q\\\"\")");
  const auto* members = &o.as<ast::OneOf>()->members;
  REQUIRE(members->size() == 3);
  CHECK((*members)[0] == Individual::integer("1"));
  CHECK((*members)[1] == Individual::decimal("2.5"));
  CHECK((*members)[2] == Individual::string("a \"q\""));
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_description("and(GAME");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_description("at-least(0, r)"), ParseError);
  CHECK_THROWS_AS(parse_description("and(A)"), ParseError);
  CHECK_THROWS_AS(parse_description("one-of(Alice, 3)", roles_and_attrs()), ParseError);
  CHECK_THROWS_AS(parse_description("same-as((friend),(participants))", roles_and_attrs()), ParseError);
  CHECK_THROWS_AS(parse_description("at-most(1, coach)", roles_and_attrs()), ParseError);
  CHECK_THROWS_AS(parse_description("and(A, Alice)", roles_and_attrs()), ParseError);
  CHECK_THROWS_AS(parse_description("fills(r, \"x)"), ParseError);
}

TEST_CASE("printing round-trips over the corpus") {
  const KnowledgeBase kb = corpus_kb();
  for (const auto& pair : random_corpus(300, 11)) {
    for (const Description* d : {&pair.d, &pair.c}) {
      const std::string text = print(*d);
      CAPTURE(text);
      CHECK(parse_description(text, kb) == *d);
    }
  }
}

TEST_CASE("knowledge-base declarations") {
  const KnowledgeBase kb = parse_kb("role participants\nattribute coach\n");
  CHECK(kb.roles == std::set<std::string>{"participants"});
  CHECK(kb.attributes == std::set<std::string>{"coach"});

  const KnowledgeBase chain = parse_kb("concept E := at-least(1, r)\nconcept F := E\n");
  CHECK(expand(dl::named("F"), chain) == dl::at_least(1, "r"));
  CHECK(chain.roles.count("r"));

  CHECK_THROWS_AS(parse_kb("concept A := B\nconcept B := A\n"), ParseError);
  CHECK_THROWS_AS(parse_kb("role r\nrole r\n"), ParseError);
  CHECK_THROWS_AS(parse_kb("bogus x\n"), ParseError);
}

TEST_CASE("knowledge-base errors report the line") {
  try {
    parse_kb("role r\n# comment\nconcept X := and(A\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("host-type declarations extend the lattice") {
  const KnowledgeBase kb = parse_kb("host-type SMALL subtype-of INTEGER\nconcept S := all(a, SMALL)\n");
  CHECK(kb.lattice.is_subtype("SMALL", "NUMBER"));
  CHECK_THROWS_AS(parse_kb("host-type X subtype-of NOPE\n"), ParseError);
}
