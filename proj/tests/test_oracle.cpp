#include <doctest.h>

#include "classic/oracle.hpp"
#include "classic/random.hpp"
#include "classic/subsume.hpp"
#include "classic/syntax.hpp"

using namespace classic;

namespace {

const Individual Arctic = Individual::named("Arctic");
const Individual Antarctic = Individual::named("Antarctic");
const Individual Yes = Individual::named("Yes");
const Individual No = Individual::named("No");

KnowledgeBase places() {
  KnowledgeBase kb;
  kb.roles = {"wantsToVisit"};
  kb.attributes = {"hasPenguins"};
  kb.individuals = {"Arctic", "Antarctic", "Yes", "No"};
  return kb;
}

struct Travel {
  Interpretation w;
  ElementId visitor, d1, d2, d3;
};

Travel travel_world() {
  Travel j;
  Interpretation& w = j.w;
  j.d1 = w.add_classic("d1");
  j.d2 = w.add_classic("d2");
  j.d3 = w.add_classic("d3");
  const ElementId yes = w.add_classic("yes");
  const ElementId no = w.add_classic("no");
  j.visitor = w.add_classic("visitor");
  w.individuals[Arctic] = {j.d1, j.d2};
  w.individuals[Antarctic] = {j.d3};
  w.individuals[Yes] = {yes};
  w.individuals[No] = {no};
  auto& pen = w.attributes["hasPenguins"];
  pen = {{j.d1, yes}, {j.d2, no}, {j.d3, yes}, {yes, yes}, {no, no}, {j.visitor, no}};
  w.roles["wantsToVisit"][j.visitor] = {j.d1, j.d3};
  return j;
}

Description traveller() {
  return parse_description("all(wantsToVisit, and(one-of(Arctic, Antarctic), all(hasPenguins, one-of(Yes))))", places());
}

GraphicalWorld separate(const std::string& d_text, const std::string& c_text, std::uint64_t seed = 0) {
  const auto ds = parse_descriptions({d_text, c_text});
  const DescriptionGraph g = canonical_graph(ds[1]);
  REQUIRE_FALSE(subsumes_graph(ds[0], g));
  Vocabulary v;
  v.add(ds[0]);
  v.add(ds[1]);
  GraphicalWorld gw = construct_graphical_world(g, &ds[0], v, HostLattice::standard(), seed);
  gw.world.validate(&v);
  CHECK(eval_graph(g, gw.world).test(gw.distinguished));
  CHECK(eval_description(ds[1], gw.world).test(gw.distinguished));
  CHECK_FALSE(eval_description(ds[0], gw.world).test(gw.distinguished));
  return gw;
}

// Element ids of `b` inside merge_worlds(a, b).
std::vector<ElementId> merged_ids(const Interpretation& a, const Interpretation& b, const Interpretation& m) {
  std::vector<ElementId> out;
  ElementId next = static_cast<ElementId>(a.size());
  for (const Element& el : b.elements) {
    if (el.realm == Realm::Host) {
      out.push_back(*m.find_label(el.label));
    } else {
      while (m.elements[next].realm != Realm::Classic) ++next;
      out.push_back(next++);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("fillers in two individuals count twice") {
  const Travel j = travel_world();
  Vocabulary v;
  v.add(traveller());
  j.w.validate(&v);
  CHECK(eval_description(traveller(), j.w).test(j.visitor));
  CHECK_FALSE(eval_description(dl::at_most(1, "wantsToVisit"), j.w).test(j.visitor));
  CHECK(congruence_classes(j.w.roles.at("wantsToVisit").at(j.visitor), j.w) == 2);
}

TEST_CASE("fillers of one individual are congruent") {
  Travel j = travel_world();
  j.w.roles["wantsToVisit"][j.visitor] = {j.d1, j.d2};
  CHECK(congruence_classes({j.d1, j.d2}, j.w) == 1);
  CHECK(eval_description(dl::at_most(1, "wantsToVisit"), j.w).test(j.visitor));
  CHECK_FALSE(eval_description(dl::at_least(2, "wantsToVisit"), j.w).test(j.visitor));
  CHECK_FALSE(eval_description(traveller(), j.w).test(j.visitor));
  const ElementId loose = j.w.add_classic("loose");
  CHECK(congruence_classes({j.d1, j.d2, loose}, j.w) == 2);
}

TEST_CASE("thing covers the domain and incoherent graphs are empty") {
  const Travel j = travel_world();
  CHECK(eval_description(dl::thing(), j.w).count() == j.w.size());
  CHECK(eval_graph(DescriptionGraph::of_atom("THING"), j.w).count() == j.w.size());
  CHECK(eval_graph(canonical_graph(dl::nothing()), j.w).none());
  CHECK(eval_description(dl::nothing(), j.w).none());
}

TEST_CASE("world invariants are enforced") {
  Travel j = travel_world();
  j.w.individuals[Antarctic].insert(j.d1);
  CHECK_THROWS_AS(j.w.validate(), std::logic_error);

  Travel k = travel_world();
  k.w.individuals[No].clear();
  CHECK_THROWS_AS(k.w.validate(), std::logic_error);

  Travel m = travel_world();
  m.w.attributes["hasPenguins"].erase(m.visitor);
  CHECK_THROWS_AS(m.w.validate(), std::logic_error);
}

TEST_CASE("merging worlds") {
  const auto corpus = random_corpus(100, 51);
  Vocabulary v;
  for (const auto& p : corpus) v.add(p.c);
  const Interpretation empty;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Interpretation a = random_world(v, 2 * s + 1);
    const Interpretation b = random_world(v, 2 * s + 2);
    const Interpretation m = merge_worlds(a, b);
    m.validate(&v);
    auto classic_count = [](const Interpretation& w) {
      std::size_t n = 0;
      for (const auto& el : w.elements) n += el.realm == Realm::Classic;
      return n;
    };
    CHECK(classic_count(m) == classic_count(a) + classic_count(b));
    CHECK(to_json(merge_worlds(a, empty)) == to_json(a));

    const auto ids = merged_ids(a, b, m);
    for (const auto& p : corpus) {
      const ElementSet ea = eval_description(p.c, a), eb = eval_description(p.c, b);
      ElementSet expect(m.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        if (ea.test(i)) expect.set(i);
      for (std::size_t i = 0; i < b.size(); ++i)
        if (eb.test(i)) expect.set(ids[i]);
      CAPTURE(print(p.c));
      CHECK(eval_description(p.c, m) == expect);
    }
  }
}

TEST_CASE("too many fillers required") {
  const GraphicalWorld gw = separate("at-least(3, r)", "and(GAME, at-least(2, r))");
  const auto& fillers = gw.world.roles.at("r").at(gw.distinguished);
  CHECK(congruence_classes(fillers, gw.world) == 2);
}

TEST_CASE("an element of the other individual") {
  const GraphicalWorld gw = separate("one-of(P)", "one-of(P, Q)");
  CHECK(gw.world.individual_of(gw.distinguished) == Individual::named("Q"));
}

TEST_CASE("different attribute values") {
  const GraphicalWorld gw = separate("same-as((a), (c))", "same-as((a), (b))");
  const auto& w = gw.world;
  CHECK(w.attributes.at("a").at(gw.distinguished) == w.attributes.at("b").at(gw.distinguished));
  CHECK(w.attributes.at("a").at(gw.distinguished) != w.attributes.at("c").at(gw.distinguished));
}

TEST_CASE("unsteered graphical worlds contain their element") {
  for (const auto& p : random_corpus(300, 52)) {
    const DescriptionGraph g = canonical_graph(p.c);
    if (g.incoherent) continue;
    Vocabulary v;
    v.add(p.c);
    for (std::uint64_t seed : {0u, 7u}) {
      const GraphicalWorld gw = construct_graphical_world(g, nullptr, v, HostLattice::standard(), seed);
      gw.world.validate(&v);
      CAPTURE(print(p.c));
      CHECK(eval_graph(g, gw.world).test(gw.distinguished));
    }
  }
}

TEST_CASE("steering with a subsumer is rejected") {
  const Description d = parse_description("at-least(1, r)");
  const DescriptionGraph g = canonical_graph(parse_description("at-least(2, r)"));
  Vocabulary v;
  v.add(d);
  CHECK_THROWS(construct_graphical_world(g, &d, v));
}

TEST_CASE("bounded search finds small models") {
  for (const char* text : {"at-least(2, r)", "and(one-of(P, Q), all(r, A), fills(r, P))", "same-as((a), (b, a))",
                           "and(INTEGER, one-of(1, 2))", "all(a, and(STRING, one-of(\"x\")))"}) {
    const SearchResult r = bounded_model_search(translate(parse_description(text)), 2, 200'000);
    CAPTURE(text);
    REQUIRE(r.model.has_value());
    CHECK(eval_graph(translate(parse_description(text)), r.model->world).test(r.model->distinguished));
  }
  const SearchResult none = bounded_model_search(translate(parse_description("and(at-least(2, r), at-most(1, r))")), 2);
  CHECK_FALSE(none.model.has_value());
  CHECK(none.exhausted);
}

TEST_CASE("worlds survive a json round trip") {
  const Travel j = travel_world();
  CHECK(to_json(world_from_json(to_json(j.w))) == to_json(j.w));
  Vocabulary v;
  v.add(parse_description("and(all(r, INTEGER), fills(a, 2.5), one-of(P))"));
  const Interpretation w = random_world(v, 99);
  const Interpretation back = world_from_json(to_json(w));
  CHECK(to_json(back) == to_json(w));
  CHECK(eval_description(parse_description("all(r, INTEGER)"), back) ==
        eval_description(parse_description("all(r, INTEGER)"), w));
}
