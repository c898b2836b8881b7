#include "classic/subsume.hpp"

#include <algorithm>
#include <unordered_map>

namespace classic {

namespace {

const DescriptionGraph& thing_graph() {
  static const DescriptionGraph g = canonicalize(DescriptionGraph::of_atom(std::string(kThing)));
  return g;
}

std::string_view builtin_atom(ast::BuiltinKind k) {
  switch (k) {
    case ast::BuiltinKind::ClassicThing: return kClassicThing;
    case ast::BuiltinKind::HostThing: return kHostThing;
    case ast::BuiltinKind::Nothing: return kNothing;
    case ast::BuiltinKind::Thing: break;
  }
  return kThing;
}

class Checker {
 public:
  bool holds(const Description& d, const DescriptionGraph& g, NodeId at, bool check_thing) {
    if (g.incoherent) return true;
    if (auto b = d.as<ast::Builtin>(); b && b->which == ast::BuiltinKind::Thing) return true;
    if (auto a = d.as<ast::And>()) {
      return std::all_of(a->conjuncts.begin(), a->conjuncts.end(),
                         [&](const Description& c) { return holds(c, g, at, check_thing); });
    }
    if (structural(d, g, at)) return true;
    return check_thing && thing_equivalent(d);
  }

 private:
  // Does d subsume the THING graph? That inner test skips this fallback.
  bool thing_equivalent(const Description& d) {
    auto it = thing_memo_.find(&d);
    if (it != thing_memo_.end()) return it->second;
    bool v = holds(d, thing_graph(), thing_graph().root, false);
    thing_memo_.emplace(&d, v);
    return v;
  }

  // End node of an attribute path from `from`, if every edge exists.
  static std::optional<NodeId> follow(const DescriptionGraph& g, NodeId from, const std::vector<std::string>& path,
                                      std::size_t length) {
    NodeId cur = from;
    for (std::size_t i = 0; i < length; ++i) {
      const AEdge* e = g.find_aedge(cur, path[i]);
      if (!e) return std::nullopt;
      cur = e->target;
    }
    return cur;
  }

  bool structural(const Description& d, const DescriptionGraph& g, NodeId at) {
    const GraphNode& r = g.nodes[at];
    if (auto b = d.as<ast::Builtin>()) return b->which != ast::BuiltinKind::Nothing && r.has_atom(builtin_atom(b->which));
    if (auto c = d.as<ast::ConceptName>()) return r.has_atom(c->name);
    if (auto c = d.as<ast::HostConcept>()) return r.has_atom(c->name);
    if (auto n = d.as<ast::AtLeast>()) {
      const REdge* e = r.find_redge(n->role);
      return e && e->min >= n->count;
    }
    if (auto n = d.as<ast::AtMost>()) {
      const REdge* e = r.find_redge(n->role);
      return e && e->max <= n->count;
    }
    if (auto a = d.as<ast::All>()) {
      if (a->kind == PropertyKind::Role) {
        const REdge* e = r.find_redge(a->property);
        if (e && holds(*a->restriction, e->restriction, e->restriction.root, true)) return true;
      } else {
        const AEdge* e = g.find_aedge(at, a->property);
        if (e && holds(*a->restriction, g, e->target, true)) return true;
      }
      return r.has_atom(kClassicThing) && thing_equivalent(*a->restriction);
    }
    if (auto s = d.as<ast::SameAs>()) {
      auto left = follow(g, at, s->left, s->left.size());
      auto right = follow(g, at, s->right, s->right.size());
      if (left && right && *left == *right) return true;
      if (s->left.back() != s->right.back()) return false;
      // Same last attribute off a shared classic node.
      auto lp = follow(g, at, s->left, s->left.size() - 1);
      auto rp = follow(g, at, s->right, s->right.size() - 1);
      return lp && rp && *lp == *rp && g.nodes[*lp].has_atom(kClassicThing);
    }
    if (auto f = d.as<ast::Fills>()) {
      if (f->kind == PropertyKind::Role) {
        const REdge* e = r.find_redge(f->property);
        return e && e->fillers.count(f->filler) > 0;
      }
      const AEdge* e = g.find_aedge(at, f->property);
      return e && e->fillers.count(f->filler) > 0;
    }
    if (auto o = d.as<ast::OneOf>()) {
      if (r.dom.is_universal()) return false;
      IndividualSet members(o->members.begin(), o->members.end());
      return std::includes(members.begin(), members.end(), r.dom.members().begin(), r.dom.members().end());
    }
    throw std::invalid_argument("subsumes: description must be expanded first");
  }

  std::unordered_map<const Description*, bool> thing_memo_;
};

}  // namespace

bool subsumes_graph(const Description& d, const DescriptionGraph& g) {
  Checker c;
  return c.holds(d, g, g.root, true);
}

bool subsumes_at(const Description& d, const DescriptionGraph& g, NodeId node) {
  Checker c;
  return c.holds(d, g, node, true);
}

DescriptionGraph canonical_graph(const Description& expanded, const CanonContext& ctx) {
  return canonicalize(translate(expanded), ctx);
}

bool subsumes_expanded(const Description& d, const Description& c, const CanonContext& ctx) {
  return subsumes_graph(d, canonical_graph(c, ctx));
}

bool subsumes(const Description& d, const Description& c, const KnowledgeBase& kb) {
  Expander ex(kb);
  Description ed = ex.expand(d);
  Description ec = ex.expand(c);
  return subsumes_graph(ed, canonical_graph(ec, kb.context()));
}

bool equivalent(const Description& d, const Description& c, const KnowledgeBase& kb) {
  Expander ex(kb);
  Description ed = ex.expand(d);
  Description ec = ex.expand(c);
  const CanonContext ctx = kb.context();
  return subsumes_graph(ed, canonical_graph(ec, ctx)) && subsumes_graph(ec, canonical_graph(ed, ctx));
}

}  // namespace classic
