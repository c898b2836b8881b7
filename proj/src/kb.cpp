#include "classic/kb.hpp"

#include <algorithm>

#include "classic/subsume.hpp"
#include "classic/syntax.hpp"

namespace classic {

const Description* KnowledgeBase::find_named(std::string_view name) const {
  for (const auto& [n, body] : named)
    if (n == name) return &body;
  return nullptr;
}

CanonContext KnowledgeBase::context() const {
  CanonContext ctx;
  ctx.lattice = lattice;
  ctx.disjoint_groups = disjoint_groups;
  return ctx;
}

std::string primitive_atom(const std::string& tag, Realm realm) {
  return std::string(realm == Realm::Host ? kHostOpaquePrefix : kClassicOpaquePrefix) + "prim:" + tag;
}

std::string test_atom(const std::string& function, Realm realm) {
  return std::string(realm == Realm::Host ? kHostOpaquePrefix : kClassicOpaquePrefix) + "test:" + function;
}

Expander::Expander(const KnowledgeBase& kb, std::size_t max_size) : kb_(kb), max_size_(max_size) {}

Description Expander::expand(const Description& d) {
  std::vector<std::string> stack;
  return rewrite(d, stack);
}

Description Expander::rewrite(const Description& d, std::vector<std::string>& stack) {
  if (++produced_ > max_size_)
    throw KbError("expansion exceeds " + std::to_string(max_size_) + " constructors");
  if (auto r = d.as<ast::NamedRef>()) {
    const Description* body = kb_.find_named(r->name);
    if (!body) throw KbError("unknown concept '" + r->name + "'");
    if (std::find(stack.begin(), stack.end(), r->name) != stack.end())
      throw KbError("recursive concept '" + r->name + "'");
    stack.push_back(r->name);
    Description out = rewrite(*body, stack);
    stack.pop_back();
    return out;
  }
  if (auto a = d.as<ast::And>()) {
    std::vector<Description> parts;
    parts.reserve(a->conjuncts.size());
    for (const auto& c : a->conjuncts) parts.push_back(rewrite(c, stack));
    return Description{ast::And{std::move(parts)}};
  }
  if (auto a = d.as<ast::All>()) return Description{ast::All{a->kind, a->property, rewrite(*a->restriction, stack)}};
  if (auto p = d.as<ast::Primitive>()) return rewrite_primitive(*p, stack);
  if (auto t = d.as<ast::Test>()) {
    Description realm = t->realm == Realm::Host ? dl::host_thing() : dl::classic_thing();
    return dl::conj({dl::atom(test_atom(t->function, t->realm)), realm});
  }
  return d;
}

Description Expander::rewrite_primitive(const ast::Primitive& p, std::vector<std::string>& stack) {
  Description body = rewrite(*p.body, stack);
  const std::string atom = primitive_atom(p.tag, realm_of(body).value_or(Realm::Classic));
  auto [it, inserted] = primitive_bodies_.emplace(p.tag, body);
  if (!inserted && !(it->second == body) && !(subsumes_expanded(it->second, body, kb_.context()) &&
                                               subsumes_expanded(body, it->second, kb_.context())))
    throw KbError("primitive tag '" + p.tag + "' reused with a non-equivalent body");
  std::vector<Description> parts{dl::atom(atom)};
  if (auto a = body.as<ast::And>())
    parts.insert(parts.end(), a->conjuncts.begin(), a->conjuncts.end());
  else
    parts.push_back(body);
  return dl::conj(std::move(parts));
}

Description expand(const Description& d, const KnowledgeBase& kb) { return Expander(kb).expand(d); }

namespace {

bool mark_disjoint(DescriptionGraph& g, const KnowledgeBase& kb) {
  bool hit = false;
  for (auto& node : g.nodes) {
    for (auto& e : node.redges) hit |= mark_disjoint(e.restriction, kb);
    for (const auto& group : kb.disjoint_groups) {
      std::size_t n = 0;
      for (const auto& a : group) n += node.atoms.count(a);
      if (n >= 2) {
        node = incoherent_node();
        hit = true;
        break;
      }
    }
  }
  return hit;
}

}  // namespace

DescriptionGraph apply_disjointness(DescriptionGraph g, const KnowledgeBase& kb) {
  if (!mark_disjoint(g, kb)) return g;
  return canonicalize(std::move(g), kb.context());
}

Taxonomy classify(const KnowledgeBase& kb) {
  const std::size_t n = kb.named.size();
  const CanonContext ctx = kb.context();
  Expander ex(kb);
  std::vector<Description> expanded;
  std::vector<DescriptionGraph> graphs;
  for (const auto& [name, body] : kb.named) {
    expanded.push_back(ex.expand(body));
    graphs.push_back(canonical_graph(expanded.back(), ctx));
  }
  // above[i][j]: concept j subsumes concept i.
  std::vector<std::vector<bool>> above(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) above[i][j] = i == j || subsumes_graph(expanded[j], graphs[i]);

  const auto thing = canonical_graph(dl::thing(), ctx);
  Taxonomy t;
  t.nodes.push_back({});
  std::vector<std::size_t> rep;  // representative concept per non-root class
  for (std::size_t i = 0; i < n; ++i) {
    if (subsumes_graph(expanded[i], thing)) {
      t.nodes[0].members.push_back(kb.named[i].first);
      continue;
    }
    std::size_t k = 0;
    for (; k < rep.size(); ++k)
      if (above[i][rep[k]] && above[rep[k]][i]) break;
    if (k == rep.size()) {
      rep.push_back(i);
      t.nodes.push_back({});
    }
    t.nodes[k + 1].members.push_back(kb.named[i].first);
  }
  for (std::size_t a = 0; a < rep.size(); ++a) {
    std::vector<std::size_t> ancestors;
    for (std::size_t b = 0; b < rep.size(); ++b)
      if (a != b && above[rep[a]][rep[b]] && !above[rep[b]][rep[a]]) ancestors.push_back(b);
    auto& parents = t.nodes[a + 1].parents;
    for (auto b : ancestors) {
      bool direct = std::none_of(ancestors.begin(), ancestors.end(),
                                 [&](std::size_t c) { return c != b && above[rep[c]][rep[b]]; });
      if (direct) parents.push_back(b + 1);
    }
    if (parents.empty()) parents.push_back(0);
  }
  return t;
}

nlohmann::ordered_json to_json(const Taxonomy& t) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    nlohmann::ordered_json j;
    j["node"] = i;
    j["members"] = t.nodes[i].members;
    j["parents"] = t.nodes[i].parents;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace classic
