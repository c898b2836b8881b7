#include <doctest.h>

#include "classic/kb.hpp"
#include "classic/normalize.hpp"
#include "classic/oracle.hpp"
#include "classic/random.hpp"
#include "classic/syntax.hpp"

using namespace classic;

namespace {

DescriptionGraph canon(const std::string& text) { return canonicalize(translate(parse_description(text))); }

const Individual P = Individual::named("P");
const Individual Q = Individual::named("Q");

}  // namespace

TEST_CASE("contradictory counts make the graph incoherent") {
  CHECK(canon("and(at-least(2, r), at-most(1, r))").incoherent);
}

TEST_CASE("at-most 0 marks only the restriction") {
  const DescriptionGraph g = canon("and(at-most(0, r), all(r, GAME))");
  CHECK_FALSE(g.incoherent);
  const REdge* e = g.root_node().find_redge("r");
  REQUIRE(e);
  CHECK(e->max == 0);
  CHECK(e->restriction.incoherent);
}

TEST_CASE("coreference chains collapse to one node") {
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const DescriptionGraph raw = translate(chain_family(n));
    const DescriptionGraph g = canonicalize(raw);
    CAPTURE(n);
    CHECK(raw.nodes.size() == 2 * n);
    CHECK(g.nodes.size() == 2);
    CHECK(g.aedges.size() == 2 * n);
  }
}

TEST_CASE("two fillers for one attribute") {
  CHECK(canon("and(same-as((coach), (coach)), fills(coach, Pat), fills(coach, Kim))").incoherent);
  KnowledgeBase kb;
  kb.attributes = {"coach"};
  const auto d = parse_description("and(all(coach, A), fills(coach, Pat), fills(coach, Kim))", kb);
  CHECK(canonicalize(translate(d)).incoherent);
}

TEST_CASE("a closed restriction turns into fillers") {
  const DescriptionGraph g = canon("and(all(r, one-of(P, Q)), at-least(2, r))");
  const REdge* e = g.root_node().find_redge("r");
  REQUIRE(e);
  CHECK(e->fillers == IndividualSet{P, Q});
}

TEST_CASE("a-edge merge") {
  DescriptionGraph g = translate(dl::conj({dl::all_attr("f", dl::atom("A")), dl::all_attr("f", dl::atom("B"))}));
  REQUIRE(g.aedges.size() == 2);
  const std::size_t before = g.nodes.size();
  const DescriptionGraph m = merge_a_edges(g, 0, 1);
  CHECK(m.aedges.size() == 1);
  CHECK(m.nodes.size() == before - 1);
  const GraphNode& t = m.nodes[m.aedges[0].target];
  CHECK(t.has_atom("A"));
  CHECK(t.has_atom("B"));
}

TEST_CASE("self-referential attribute collapses into a loop") {
  const DescriptionGraph g = canon("and(all(friend, TALL), same-as((friend), (friend, friend)))");
  REQUIRE(g.nodes.size() == 2);
  const AEdge* first = g.find_aedge(g.root, "friend");
  REQUIRE(first);
  const NodeId x = first->target;
  CHECK(x != g.root);
  CHECK(g.nodes[x].has_atom("TALL"));
  const AEdge* loop = g.find_aedge(x, "friend");
  REQUIRE(loop);
  CHECK(loop->target == x);
}

TEST_CASE("r-edge merge") {
  GraphNode n;
  n.atoms = {"CLASSIC-THING"};
  n.redges.push_back(REdge{"r", 1, kUnbounded, DescriptionGraph::of_atom("THING"), {P}});
  n.redges.push_back(REdge{"r", 0, 3, DescriptionGraph::of_atom("GAME"), {Q}});
  const GraphNode m = merge_r_edges(n, 0, 1);
  REQUIRE(m.redges.size() == 1);
  const REdge& e = m.redges[0];
  CHECK(e.min == 1);
  CHECK(e.max == 3);
  CHECK(e.fillers == IndividualSet{P, Q});
  CHECK(e.restriction.root_node().has_atom("GAME"));
  CHECK(e.restriction.root_node().has_atom("THING"));

  GraphNode same;
  same.redges.push_back(REdge{"r", 0, kUnbounded, DescriptionGraph::of_atom("THING"), {}});
  same.redges.push_back(same.redges[0]);
  const GraphNode s = merge_r_edges(same, 0, 1);
  CHECK(s.redges[0].min == 0);
  CHECK(s.redges[0].max == kUnbounded);
}

TEST_CASE("host literals are typed by the lattice") {
  CHECK(canon("and(INTEGER, one-of(2.5))").incoherent);
  CHECK_FALSE(canon("and(REAL, one-of(2, 2.5))").incoherent);
  const DescriptionGraph g = canon("one-of(1, 2)");
  CHECK(g.root_node().has_atom("INTEGER"));
  CHECK(g.root_node().has_atom("HOST-THING"));
  CHECK(canon("and(STRING, INTEGER)").incoherent);
  CHECK(canon("and(CLASSIC-THING, INTEGER)").incoherent);
}

TEST_CASE("canonical form is a fixpoint under both rule orders") {
  CanonContext reversed = default_context();
  reversed.order = RuleOrder::Reversed;
  for (const auto& p : random_corpus(400, 31)) {
    const DescriptionGraph raw = translate(p.c);
    const DescriptionGraph g = canonicalize(raw);
    CAPTURE(print(p.c));
    CHECK(is_canonical(g));
    CHECK(isomorphic(canonicalize(g), g));
    CHECK(isomorphic(canonicalize(raw, reversed), g));
  }
}

TEST_CASE("canonicalization preserves extensions") {
  const auto corpus = random_corpus(200, 32);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Description& d = corpus[i].c;
    const DescriptionGraph raw = translate(d);
    const DescriptionGraph g = canonicalize(raw);
    Vocabulary v;
    v.add(d);
    for (std::uint64_t s = 0; s < 5; ++s) {
      Interpretation w = random_world(v, 900 + i * 10 + s);
      if (!g.incoherent && s % 2) w = merge_worlds(w, construct_graphical_world(g, nullptr, v, w.lattice, s).world);
      CAPTURE(print(d));
      CHECK(eval_graph(g, w) == eval_graph(raw, w));
    }
  }
}

TEST_CASE("incoherent graphs have no small models") {
  std::size_t seen = 0;
  for (const auto& p : random_corpus(600, 33)) {
    if (!canonicalize(translate(p.c)).incoherent) continue;
    ++seen;
    const SearchResult r = bounded_model_search(translate(p.c), 2, 50'000);
    CAPTURE(print(p.c));
    CHECK_FALSE(r.model.has_value());
  }
  CHECK(seen > 5);
}
