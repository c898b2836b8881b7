#include "classic/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "classic/host.hpp"

namespace classic {

bool Dom::includes(const IndividualSet& s) const {
  if (!members_) return true;
  return std::includes(members_->begin(), members_->end(), s.begin(), s.end());
}

Dom Dom::intersect(const Dom& other) const {
  if (!members_) return other;
  if (!other.members_) return *this;
  IndividualSet out;
  std::set_intersection(members_->begin(), members_->end(), other.members_->begin(), other.members_->end(),
                        std::inserter(out, out.end()));
  return Dom::of(std::move(out));
}

bool GraphNode::incoherent() const { return has_atom(kNothing); }

const REdge* GraphNode::find_redge(std::string_view role) const {
  auto it = std::lower_bound(redges.begin(), redges.end(), role,
                             [](const REdge& e, std::string_view r) { return e.role < r; });
  if (it == redges.end() || it->role != role) return nullptr;
  return &*it;
}

DescriptionGraph DescriptionGraph::single(GraphNode node) {
  DescriptionGraph g;
  g.nodes.push_back(std::move(node));
  return g;
}

DescriptionGraph DescriptionGraph::of_atom(std::string atom) {
  GraphNode n;
  n.atoms.insert(std::move(atom));
  return single(std::move(n));
}

DescriptionGraph DescriptionGraph::incoherent_graph() {
  DescriptionGraph g = single(incoherent_node());
  g.incoherent = true;
  return g;
}

const AEdge* DescriptionGraph::find_aedge(NodeId source, std::string_view attribute) const {
  auto it = std::lower_bound(aedges.begin(), aedges.end(), std::pair{source, attribute},
                             [](const AEdge& e, const std::pair<NodeId, std::string_view>& key) {
                               if (e.source != key.first) return e.source < key.first;
                               return std::string_view(e.attribute) < key.second;
                             });
  if (it == aedges.end() || it->source != source || it->attribute != attribute) return nullptr;
  return &*it;
}

GraphNode incoherent_node() {
  GraphNode n;
  n.atoms.insert(std::string(kNothing));
  return n;
}

GraphNode merge_nodes(const GraphNode& a, const GraphNode& b) {
  GraphNode out = a;
  out.atoms.insert(b.atoms.begin(), b.atoms.end());
  out.redges.insert(out.redges.end(), b.redges.begin(), b.redges.end());
  out.dom = a.dom.intersect(b.dom);
  return out;
}

namespace {

// Merges `other` into `into`; the merged root keeps into's root id.
void absorb(DescriptionGraph& into, const DescriptionGraph& other) {
  const auto offset = static_cast<NodeId>(into.nodes.size());
  std::vector<NodeId> remap(other.nodes.size());
  NodeId next = offset;
  for (NodeId i = 0; i < other.nodes.size(); ++i) {
    if (i == other.root) {
      remap[i] = into.root;
      continue;
    }
    remap[i] = next++;
    into.nodes.push_back(other.nodes[i]);
  }
  into.nodes[into.root] = merge_nodes(into.nodes[into.root], other.nodes[other.root]);
  for (const auto& e : other.aedges)
    into.aedges.push_back(AEdge{remap[e.source], remap[e.target], e.attribute, e.fillers});
}

GraphNode classic_node() {
  GraphNode n;
  n.atoms.insert(std::string(kClassicThing));
  return n;
}

std::string_view builtin_atom(ast::BuiltinKind k) {
  switch (k) {
    case ast::BuiltinKind::Thing: return kThing;
    case ast::BuiltinKind::ClassicThing: return kClassicThing;
    case ast::BuiltinKind::HostThing: return kHostThing;
    case ast::BuiltinKind::Nothing: return kNothing;
  }
  return kThing;
}

DescriptionGraph single_redge(REdge edge) {
  GraphNode n = classic_node();
  n.redges.push_back(std::move(edge));
  return DescriptionGraph::single(std::move(n));
}

DescriptionGraph realm_graph(const Individual& l) {
  return DescriptionGraph::of_atom(std::string(l.is_host() ? kHostThing : kClassicThing));
}

DescriptionGraph translate_same_as(const ast::SameAs& s) {
  DescriptionGraph g;
  g.nodes.push_back(classic_node());                           // r
  g.nodes.push_back(DescriptionGraph::of_atom(std::string(kThing)).nodes[0]);  // e
  const NodeId r = 0, e = 1;
  auto add_path = [&](const std::vector<std::string>& chain) {
    NodeId prev = r;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto mid = static_cast<NodeId>(g.nodes.size());
      g.nodes.push_back(classic_node());
      g.aedges.push_back(AEdge{prev, mid, chain[i], {}});
      prev = mid;
    }
    g.aedges.push_back(AEdge{prev, e, chain.back(), {}});
  };
  add_path(s.left);
  add_path(s.right);
  return g;
}

}  // namespace

DescriptionGraph merge_graphs(const DescriptionGraph& a, const DescriptionGraph& b) {
  if (a.incoherent || b.incoherent) return DescriptionGraph::incoherent_graph();
  DescriptionGraph out = a;
  absorb(out, b);
  return out;
}

DescriptionGraph translate(const Description& d) {
  struct Visitor {
    DescriptionGraph operator()(const ast::Builtin& b) const {
      if (b.which == ast::BuiltinKind::Nothing) return DescriptionGraph::incoherent_graph();
      return DescriptionGraph::of_atom(std::string(builtin_atom(b.which)));
    }
    DescriptionGraph operator()(const ast::ConceptName& c) const { return DescriptionGraph::of_atom(c.name); }
    DescriptionGraph operator()(const ast::HostConcept& c) const { return DescriptionGraph::of_atom(c.name); }
    DescriptionGraph operator()(const ast::And& a) const {
      DescriptionGraph g = translate(a.conjuncts.front());
      for (std::size_t i = 1; i < a.conjuncts.size(); ++i) {
        DescriptionGraph next = translate(a.conjuncts[i]);
        if (g.incoherent || next.incoherent) return DescriptionGraph::incoherent_graph();
        absorb(g, next);
      }
      return g;
    }
    DescriptionGraph operator()(const ast::All& a) const {
      DescriptionGraph inner = translate(*a.restriction);
      if (a.kind == PropertyKind::Role) return single_redge(REdge{a.property, 0, kUnbounded, std::move(inner), {}});
      if (a.kind == PropertyKind::Unresolved) throw std::invalid_argument("translate: unresolved property " + a.property);
      // The restriction graph may itself be incoherent; the attribute value
      // must still exist, so carry the NOTHING node and let canonicalization decide.
      const auto t = static_cast<NodeId>(inner.nodes.size());
      inner.nodes.push_back(classic_node());
      inner.aedges.push_back(AEdge{t, inner.root, a.property, {}});
      inner.root = t;
      inner.incoherent = false;
      return inner;
    }
    DescriptionGraph operator()(const ast::AtLeast& a) const {
      return single_redge(REdge{a.role, a.count, kUnbounded, DescriptionGraph::of_atom(std::string(kThing)), {}});
    }
    DescriptionGraph operator()(const ast::AtMost& a) const {
      return single_redge(REdge{a.role, 0, a.count, DescriptionGraph::of_atom(std::string(kThing)), {}});
    }
    DescriptionGraph operator()(const ast::SameAs& s) const { return translate_same_as(s); }
    DescriptionGraph operator()(const ast::Fills& f) const {
      if (f.kind == PropertyKind::Role)
        // The restriction stays THING: a filler requirement says nothing about
        // the other fillers, which may live in either realm.
        return single_redge(REdge{f.property, 0, kUnbounded, DescriptionGraph::of_atom(std::string(kThing)), {f.filler}});
      if (f.kind == PropertyKind::Unresolved) throw std::invalid_argument("translate: unresolved property " + f.property);
      DescriptionGraph g = DescriptionGraph::single(classic_node());
      g.nodes.push_back(realm_graph(f.filler).nodes[0]);
      g.aedges.push_back(AEdge{0, 1, f.property, {f.filler}});
      return g;
    }
    DescriptionGraph operator()(const ast::OneOf& o) const {
      bool host = o.members.front().is_host();
      for (const auto& m : o.members)
        if (m.is_host() != host) throw std::invalid_argument("translate: one-of mixes host and classic individuals");
      GraphNode n;
      n.atoms.insert(std::string(host ? kHostThing : kClassicThing));
      n.dom = Dom::of(IndividualSet(o.members.begin(), o.members.end()));
      return DescriptionGraph::single(std::move(n));
    }
    DescriptionGraph operator()(const ast::NamedRef&) const { return unexpanded(); }
    DescriptionGraph operator()(const ast::Primitive&) const { return unexpanded(); }
    DescriptionGraph operator()(const ast::Test&) const { return unexpanded(); }
    static DescriptionGraph unexpanded() {
      throw std::invalid_argument("translate: description must be expanded first");
    }
  };
  return std::visit(Visitor{}, d.node);
}

std::size_t graph_size(const DescriptionGraph& g) {
  std::size_t n = g.nodes.size() + g.aedges.size();
  for (const auto& node : g.nodes) {
    n += node.atoms.size();
    for (const auto& e : node.redges) n += 1 + graph_size(e.restriction);
  }
  return n;
}

namespace {

nlohmann::ordered_json individuals_json(const IndividualSet& s) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& i : s) arr.push_back(to_text(i));
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const DescriptionGraph& g) {
  const auto n = g.nodes.size();
  std::vector<std::vector<std::size_t>> out_edges(n);
  for (std::size_t i = 0; i < g.aedges.size(); ++i) out_edges[g.aedges[i].source].push_back(i);
  for (auto& list : out_edges)
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
      const auto& ex = g.aedges[x];
      const auto& ey = g.aedges[y];
      if (ex.attribute != ey.attribute) return ex.attribute < ey.attribute;
      return ex.target < ey.target;
    });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, kUnset);
  std::vector<NodeId> order;
  auto walk = [&](NodeId start) {
    std::deque<NodeId> queue{start};
    label[start] = order.size();
    order.push_back(start);
    while (!queue.empty()) {
      NodeId cur = queue.front();
      queue.pop_front();
      for (auto ei : out_edges[cur]) {
        NodeId t = g.aedges[ei].target;
        if (label[t] != kUnset) continue;
        label[t] = order.size();
        order.push_back(t);
        queue.push_back(t);
      }
    }
  };
  if (n > 0) walk(g.root);
  for (NodeId i = 0; i < n; ++i)
    if (label[i] == kUnset) walk(i);

  nlohmann::ordered_json j;
  j["root"] = 0;
  j["incoherent"] = g.incoherent;
  auto nodes = nlohmann::ordered_json::array();
  for (NodeId id : order) {
    const auto& node = g.nodes[id];
    nlohmann::ordered_json jn;
    jn["id"] = label[id];
    jn["atoms"] = node.atoms;
    if (node.dom.is_universal())
      jn["dom"] = "*";
    else
      jn["dom"] = individuals_json(node.dom.members());
    std::vector<std::pair<std::string, nlohmann::ordered_json>> redges;
    for (const auto& e : node.redges) {
      nlohmann::ordered_json je;
      je["role"] = e.role;
      je["min"] = e.min;
      if (e.max == kUnbounded)
        je["max"] = "inf";
      else
        je["max"] = e.max;
      je["fillers"] = individuals_json(e.fillers);
      je["restriction"] = to_json(e.restriction);
      redges.emplace_back(je.dump(), std::move(je));
    }
    std::sort(redges.begin(), redges.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    jn["redges"] = nlohmann::ordered_json::array();
    for (auto& [key, je] : redges) jn["redges"].push_back(std::move(je));
    nodes.push_back(std::move(jn));
  }
  j["nodes"] = std::move(nodes);

  std::vector<std::tuple<std::size_t, std::string, std::size_t, std::string>> edges;
  for (const auto& e : g.aedges)
    edges.emplace_back(label[e.source], e.attribute, label[e.target], individuals_json(e.fillers).dump());
  std::sort(edges.begin(), edges.end());
  auto aedges = nlohmann::ordered_json::array();
  for (const auto& [src, attr, dst, fillers] : edges) {
    nlohmann::ordered_json je;
    je["src"] = src;
    je["dst"] = dst;
    je["attr"] = attr;
    je["fillers"] = nlohmann::ordered_json::parse(fillers);
    aedges.push_back(std::move(je));
  }
  j["aedges"] = std::move(aedges);
  return j;
}

std::string dump(const DescriptionGraph& g) { return to_json(g).dump(2); }

bool isomorphic(const DescriptionGraph& a, const DescriptionGraph& b) {
  return a.nodes.size() == b.nodes.size() && to_json(a) == to_json(b);
}

}  // namespace classic
