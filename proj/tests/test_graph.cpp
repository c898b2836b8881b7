#include <doctest.h>

#include <fstream>
#include <sstream>

#include "classic/graph.hpp"
#include "classic/oracle.hpp"
#include "classic/random.hpp"
#include "classic/syntax.hpp"

using namespace classic;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(CLASSIC_GOLDEN_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GraphNode node(std::set<std::string> atoms, Dom dom = Dom::universal()) {
  GraphNode n;
  n.atoms = std::move(atoms);
  n.dom = std::move(dom);
  return n;
}

// Raw translations are unsorted, so no binary search here.
const AEdge* edge(const DescriptionGraph& g, NodeId src, const std::string& attr) {
  for (const auto& e : g.aedges)
    if (e.source == src && e.attribute == attr) return &e;
  return nullptr;
}

const Individual P = Individual::named("P");
const Individual Q = Individual::named("Q");
const Individual R = Individual::named("R");

}  // namespace

TEST_CASE("game graph matches the golden dump") {
  const Description d = parse_description("and(GAME, all(participants, PERSON), same-as((coach), (captain, father)))");
  const DescriptionGraph g = translate(d);
  CHECK(dump(g) + "\n" == read_golden("game.json"));

  REQUIRE(g.nodes.size() == 3);
  REQUIRE(g.aedges.size() == 3);
  CHECK(g.root_node().has_atom("GAME"));
  REQUIRE(g.root_node().redges.size() == 1);
  const REdge& e = g.root_node().redges[0];
  CHECK(e.role == "participants");
  CHECK(e.min == 0);
  CHECK(e.max == kUnbounded);
  REQUIRE(e.restriction.nodes.size() == 1);
  CHECK(e.restriction.root_node().has_atom("PERSON"));
  const AEdge* coach = edge(g, g.root, "coach");
  const AEdge* captain = edge(g, g.root, "captain");
  REQUIRE(coach);
  REQUIRE(captain);
  const AEdge* father = edge(g, captain->target, "father");
  REQUIRE(father);
  CHECK(father->target == coach->target);
}

TEST_CASE("node merge unions atoms and intersects doms") {
  GraphNode m = merge_nodes(node({"CLASSIC-THING"}), node({"GAME"}));
  CHECK(m.atoms == std::set<std::string>{"CLASSIC-THING", "GAME"});
  CHECK(m.dom.is_universal());

  m = merge_nodes(node({"CLASSIC-THING"}, Dom::of({P, Q})), node({"CLASSIC-THING"}, Dom::of({Q, R})));
  CHECK(m.dom == Dom::of({Q}));

  GraphNode a = node({"CLASSIC-THING"});
  a.redges.push_back(REdge{"r", 1, kUnbounded, DescriptionGraph::of_atom("THING"), {}});
  GraphNode b = a;
  b.redges[0].max = 3;
  CHECK(merge_nodes(a, b).redges.size() == 2);
}

TEST_CASE("graph merge shares the root") {
  const auto thing = DescriptionGraph::of_atom("THING");
  const DescriptionGraph tt = merge_graphs(thing, thing);
  CHECK(tt.nodes.size() == 1);
  CHECK(tt.root_node().atoms == std::set<std::string>{"THING"});

  const DescriptionGraph g = merge_graphs(translate(dl::atom("GAME")), translate(dl::at_least(4, "participants")));
  REQUIRE(g.nodes.size() == 1);
  CHECK(g.root_node().has_atom("GAME"));
  CHECK(g.root_node().has_atom("CLASSIC-THING"));
  REQUIRE(g.root_node().redges.size() == 1);
  CHECK(g.root_node().redges[0].min == 4);
  CHECK(g.root_node().redges[0].max == kUnbounded);

  const auto a = translate(dl::same_as({"x"}, {"y", "z"}));
  const auto b = translate(dl::same_as({"u", "v"}, {"w"}));
  CHECK(merge_graphs(a, b).nodes.size() == a.nodes.size() + b.nodes.size() - 1);
}

TEST_CASE("individual constructors") {
  const DescriptionGraph o = translate(dl::one_of({P, Q}));
  REQUIRE(o.nodes.size() == 1);
  CHECK(o.root_node().has_atom("CLASSIC-THING"));
  CHECK(o.root_node().dom == Dom::of({P, Q}));

  const DescriptionGraph f = translate(dl::fills_attr("coach", Individual::named("Pat")));
  REQUIRE(f.nodes.size() == 2);
  REQUIRE(f.aedges.size() == 1);
  CHECK(f.aedges[0].fillers == IndividualSet{Individual::named("Pat")});
}

TEST_CASE("translation preserves extensions over the corpus") {
  const auto corpus = random_corpus(150, 21);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Description& d = corpus[i].c;
    Vocabulary v;
    v.add(d);
    const DescriptionGraph g = translate(d);
    for (std::uint64_t s = 0; s < 6; ++s) {
      const Interpretation w = random_world(v, i * 100 + s);
      CAPTURE(print(d));
      CHECK(eval_graph(g, w) == eval_description(d, w));
      ++checked;
    }
  }
  CHECK(checked == 900);
}

TEST_CASE("merges intersect extensions") {
  const auto corpus = random_corpus(120, 22);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const DescriptionGraph a = translate(corpus[i].c);
    const DescriptionGraph b = translate(corpus[i].d);
    Vocabulary v;
    v.add(corpus[i].c);
    v.add(corpus[i].d);
    const DescriptionGraph m = merge_graphs(a, b);
    const GraphNode mn = merge_nodes(a.root_node(), b.root_node());
    for (std::uint64_t s = 0; s < 4; ++s) {
      const Interpretation w = random_world(v, 7000 + i * 10 + s);
      CHECK(eval_graph(m, w) == (eval_graph(a, w) & eval_graph(b, w)));
      CHECK(eval_node(mn, w) == (eval_node(a.root_node(), w) & eval_node(b.root_node(), w)));
    }
  }
}

TEST_CASE("graph size is linear in description size") {
  double worst = 0;
  for (const auto& p : random_corpus(500, 23)) worst = std::max(worst, double(graph_size(translate(p.c))) / size(p.c));
  CHECK(worst <= 4.0);
  // A long coreference chain stays linear too.
  std::vector<std::string> path(200, "f");
  const Description d = dl::same_as(path, {"g"});
  CHECK(graph_size(translate(d)) <= 4 * size(d));
}

TEST_CASE("role restrictions hang off nodes as separate graphs") {
  const DescriptionGraph g = translate(parse_description("all(r, same-as((a), (b)))"));
  REQUIRE(g.nodes.size() == 1);
  CHECK(g.aedges.empty());
  REQUIRE(g.root_node().redges.size() == 1);
  CHECK(g.root_node().redges[0].restriction.aedges.size() == 2);
}
