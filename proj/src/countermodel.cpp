#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>

#include "classic/oracle.hpp"
#include "classic/subsume.hpp"

namespace classic {

namespace {

// ---------------------------------------------------------------------- plan

struct GraphPlan;

struct RolePlan {
  std::optional<std::size_t> count;
  std::optional<Realm> stray_filler;  // one filler of this realm, when the node has no edge
  IndividualSet avoid;
  std::shared_ptr<GraphPlan> steer;  // plan for one filler inside the restriction
};

struct NodePlan {
  bool force_host = false;
  IndividualSet avoid;
  std::set<std::string> avoid_types;
  std::map<std::string, RolePlan> roles;
  std::map<std::string, Realm> fresh_attrs;
};

struct GraphPlan {
  std::map<NodeId, NodePlan> nodes;
  std::vector<std::pair<NodeId, NodeId>> distinct;
};

struct PathEnd {
  NodeId node;
  std::size_t length;
};

PathEnd walk(const DescriptionGraph& g, NodeId from, const std::vector<std::string>& path, std::size_t limit) {
  PathEnd end{from, 0};
  while (end.length < limit) {
    const AEdge* e = g.find_aedge(end.node, path[end.length]);
    if (!e) break;
    end.node = e->target;
    ++end.length;
  }
  return end;
}

[[noreturn]] void unreachable(const char* what) {
  throw std::logic_error(std::string("construct: steering target is subsumed (") + what + ")");
}

Realm opposite(std::optional<Realm> r, const char* what) {
  if (!r) unreachable(what);
  return *r == Realm::Classic ? Realm::Host : Realm::Classic;
}

void plan_same_as(const ast::SameAs& s, const DescriptionGraph& g, NodeId x, GraphPlan& out) {
  const std::size_t n = s.left.size(), m = s.right.size();
  for (const auto* path : {&s.left, &s.right}) {
    PathEnd p = walk(g, x, *path, path->size() - 1);
    if (p.length < path->size() - 1) {
      // The chain hits a host value before its last attribute.
      out.nodes[p.node].fresh_attrs[(*path)[p.length]] = Realm::Host;
      return;
    }
  }
  PathEnd lf = walk(g, x, s.left, n), rf = walk(g, x, s.right, m);
  if (lf.length == n && rf.length == m) {
    if (lf.node == rf.node) unreachable("same-as");
    out.distinct.emplace_back(lf.node, rf.node);
    return;
  }
  const NodeId lp = walk(g, x, s.left, n - 1).node, rp = walk(g, x, s.right, m - 1).node;
  if (lp == rp && !g.nodes[lp].has_atom(kClassicThing)) {
    if (!g.nodes[lp].has_atom(kHostThing)) out.nodes[lp].force_host = true;
    return;
  }
  if (lp == rp && s.left.back() == s.right.back()) unreachable("same-as prefix");
  if (lf.length < n) out.nodes[lp].fresh_attrs[s.left.back()] = Realm::Classic;
  if (rf.length < m) out.nodes[rp].fresh_attrs[s.right.back()] = Realm::Classic;
}

// Records choices that keep the element built for node `x` out of `d`.
// Precondition: `d` does not subsume `g` at `x`.
void plan(const Description& d, const DescriptionGraph& g, NodeId x, GraphPlan& out) {
  if (g.incoherent) unreachable("incoherent graph");
  if (auto a = d.as<ast::And>()) {
    for (const auto& c : a->conjuncts)
      if (!subsumes_at(c, g, x)) return plan(c, g, x, out);
    unreachable("and");
  }
  if (auto b = d.as<ast::Builtin>(); b && b->which == ast::BuiltinKind::Nothing) return;

  const GraphNode& node = g.nodes[x];
  const bool classic = node.has_atom(kClassicThing), host = node.has_atom(kHostThing);
  const std::optional<Realm> realm = realm_of(d);
  if (realm == Realm::Classic && !classic) {
    if (!host) out.nodes[x].force_host = true;
    return;
  }
  // Nodes without a realm atom get a classic element by default.
  if (realm == Realm::Host && !host) return;

  NodePlan& np = out.nodes[x];
  if (d.is<ast::Builtin>()) unreachable("builtin");
  if (auto c = d.as<ast::ConceptName>()) {
    if (realm == Realm::Host) np.avoid_types.insert(c->name);
    return;
  }
  if (auto c = d.as<ast::HostConcept>()) {
    np.avoid_types.insert(c->name);
    return;
  }
  if (auto c = d.as<ast::AtLeast>()) {
    const REdge* e = node.find_redge(c->role);
    np.roles[c->role].count = e ? std::min<Count>(c->count - 1, e->max) : c->count - 1;
    return;
  }
  if (auto c = d.as<ast::AtMost>()) {
    np.roles[c->role].count = c->count + 1;
    return;
  }
  if (auto a = d.as<ast::All>()) {
    if (a->kind == PropertyKind::Role) {
      const REdge* e = node.find_redge(a->property);
      if (!e) {
        np.roles[a->property].stray_filler = opposite(realm_of(*a->restriction), "all");
        return;
      }
      if (e->restriction.incoherent) unreachable("all");
      auto sub = std::make_shared<GraphPlan>();
      plan(*a->restriction, e->restriction, e->restriction.root, *sub);
      np.roles[a->property].steer = std::move(sub);
      return;
    }
    if (const AEdge* e = g.find_aedge(x, a->property)) return plan(*a->restriction, g, e->target, out);
    np.fresh_attrs[a->property] = opposite(realm_of(*a->restriction), "all");
    return;
  }
  if (auto s = d.as<ast::SameAs>()) return plan_same_as(*s, g, x, out);
  if (auto f = d.as<ast::Fills>()) {
    if (f->kind == PropertyKind::Role) {
      RolePlan& rp = np.roles[f->property];
      const REdge* e = node.find_redge(f->property);
      rp.count = e ? e->min : 0;
      rp.avoid.insert(f->filler);
      return;
    }
    if (const AEdge* e = g.find_aedge(x, f->property)) {
      out.nodes[e->target].avoid.insert(f->filler);
      return;
    }
    np.fresh_attrs[f->property] = Realm::Classic;
    return;
  }
  if (auto o = d.as<ast::OneOf>()) {
    np.avoid.insert(o->members.begin(), o->members.end());
    return;
  }
  throw std::invalid_argument("construct: steering description must be expanded");
}

// ------------------------------------------------------------------- builder

struct RootConstraint {
  std::optional<Individual> must_be;
  IndividualSet avoid;
  std::set<ElementId> exclude;
};

class Builder {
 public:
  Builder(Interpretation& w, const Vocabulary& v, std::uint64_t seed) : w_(w), v_(v), seed_(seed), rng_(seed) {}

  ElementId build(const DescriptionGraph& g, const GraphPlan* plan, const RootConstraint& rc) {
    if (g.incoherent) throw std::logic_error("construct: an incoherent graph has no elements");
    const std::size_t n = g.nodes.size();
    auto plan_of = [&](NodeId i) -> const NodePlan* {
      if (!plan) return nullptr;
      auto it = plan->nodes.find(i);
      return it == plan->nodes.end() ? nullptr : &it->second;
    };

    // Host nodes last, tightest domains first, so literal choices stay open.
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      auto key = [&](NodeId i) {
        const GraphNode& nd = g.nodes[i];
        return std::pair(nd.has_atom(kHostThing), nd.dom.size());
      };
      return key(a) < key(b);
    });

    std::vector<std::optional<ElementId>> y(n);
    for (NodeId i : order) {
      const GraphNode& node = g.nodes[i];
      const NodePlan* np = plan_of(i);
      IndividualSet avoid = np ? np->avoid : IndividualSet{};
      std::optional<Individual> must;
      std::set<ElementId> exclude;
      if (i == g.root) {
        avoid.insert(rc.avoid.begin(), rc.avoid.end());
        must = rc.must_be;
        exclude = rc.exclude;
      }
      if (plan) {
        for (const auto& [u, v] : plan->distinct) {
          if (u == i && y[v]) exclude.insert(*y[v]);
          if (v == i && y[u]) exclude.insert(*y[u]);
        }
      }
      const bool host = node.has_atom(kHostThing);
      const bool classic = node.has_atom(kClassicThing);
      if (host || (!classic && ((np && np->force_host) || (must && must->is_host()))))
        y[i] = pick_host(node, np, avoid, must, exclude);
      else
        y[i] = pick_classic(node, avoid, must);
    }

    for (const auto& e : g.aedges)
      if (is_classic(*y[e.source])) w_.attributes[e.attribute][*y[e.source]] = *y[e.target];
    for (NodeId i = 0; i < n; ++i) {
      const ElementId x = *y[i];
      if (!is_classic(x)) continue;
      const NodePlan* np = plan_of(i);
      if (np) {
        for (const auto& [attr, realm] : np->fresh_attrs)
          w_.attributes[attr][x] = realm == Realm::Host ? fresh_host(std::nullopt) : fresh_classic();
      }
      for (const auto& e : g.nodes[i].redges) {
        const RolePlan* rp = nullptr;
        if (np) {
          auto it = np->roles.find(e.role);
          if (it != np->roles.end()) rp = &it->second;
        }
        fill_role(x, e, rp);
      }
      if (!np) continue;
      for (const auto& [role, rp] : np->roles) {
        if (g.nodes[i].find_redge(role)) continue;
        auto& fillers = w_.roles[role][x];
        for (std::size_t k = 0; k < rp.count.value_or(0); ++k) fillers.insert(fresh_classic());
        if (rp.stray_filler)
          fillers.insert(*rp.stray_filler == Realm::Host ? fresh_host(std::nullopt) : fresh_classic());
      }
    }
    return *y[g.root];
  }

  // Gives every individual an element, every literal its element, and every
  // classic element a value for each attribute.
  void finish() {
    for (const auto& ind : v_.individuals) {
      auto& ext = w_.individuals[ind];
      if (ext.empty()) ext.insert(fresh_classic());
    }
    for (const auto& lit : v_.literals) w_.literal(lit);
    std::set<std::string> attrs = v_.attributes;
    for (const auto& [a, table] : w_.attributes) attrs.insert(a);
    const auto count = static_cast<ElementId>(w_.size());
    for (const auto& a : attrs) {
      for (ElementId e = 0; e < count; ++e) {
        if (!is_classic(e) || w_.attributes[a].count(e)) continue;
        const std::string label = "sink:" + a;
        auto sink = w_.find_label(label);
        w_.attributes[a][e] = sink ? *sink : w_.add_host(label, std::nullopt);
      }
    }
  }

 private:
  bool is_classic(ElementId e) const { return w_.elements[e].realm == Realm::Classic; }

  ElementId fresh_classic() { return w_.add_classic("c" + std::to_string(classic_count_++)); }

  ElementId fresh_host(const std::optional<std::string>& type) {
    return w_.add_host("h:" + type.value_or("") + ":" + std::to_string(host_count_++), type);
  }

  // Index into `n` choices; the first unless a seed asks for variety.
  std::size_t choose(std::size_t n) {
    if (seed_ == 0 || n <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  template <class T>
  const T& choose_preferring(const std::vector<T>& preferred, const std::vector<T>& rest) {
    const auto& pool = preferred.empty() ? rest : preferred;
    if (pool.empty()) throw std::logic_error("construct: no admissible element");
    return pool[choose(pool.size())];
  }

  ElementId pick_classic(const GraphNode& node, const IndividualSet& avoid, const std::optional<Individual>& must) {
    const ElementId e = fresh_classic();
    for (const auto& a : node.atoms)
      if (classify_atom(a, w_.lattice) == AtomKind::Classic) w_.concepts[a].insert(e);
    std::optional<Individual> chosen;
    if (!node.dom.is_universal()) {
      std::vector<Individual> fresh, used;
      for (const auto& l : node.dom.members()) {
        if (l.is_host() || avoid.count(l)) continue;
        if (must && l == *must) chosen = l;
        (used_individuals_.count(l) ? used : fresh).push_back(l);
      }
      if (!chosen) chosen = choose_preferring(fresh, used);
    } else if (must) {
      chosen = must;
    }
    if (chosen) {
      w_.individuals[*chosen].insert(e);
      used_individuals_.insert(*chosen);
    }
    return e;
  }

  bool literal_avoided(const Individual& l, const NodePlan* np) const {
    if (!np) return false;
    for (const auto& t : np->avoid_types) {
      if (w_.lattice.contains(t)) {
        if (w_.lattice.literal_in(l, t)) return true;
        continue;
      }
      auto e = w_.find_literal(l);
      auto it = w_.concepts.find(t);
      if (e && it != w_.concepts.end() && it->second.count(*e)) return true;
    }
    return false;
  }

  ElementId pick_host(const GraphNode& node, const NodePlan* np, const IndividualSet& avoid,
                      const std::optional<Individual>& must, const std::set<ElementId>& exclude) {
    ElementId e;
    if (must) {
      e = w_.literal(*must);
    } else if (!node.dom.is_universal()) {
      std::vector<Individual> fresh, used;
      for (const auto& l : node.dom.members()) {
        if (!l.is_host() || avoid.count(l) || literal_avoided(l, np)) continue;
        auto existing = w_.find_literal(l);
        if (existing && exclude.count(*existing)) continue;
        (existing && used_hosts_.count(*existing) ? used : fresh).push_back(l);
      }
      e = w_.literal(choose_preferring(fresh, used));
    } else {
      std::optional<std::string> deepest;
      std::size_t depth = 0;
      for (const auto& a : node.atoms) {
        if (classify_atom(a, w_.lattice) != AtomKind::HostType) continue;
        const std::size_t d = w_.lattice.ancestors(a).size();
        if (d > depth) deepest = a, depth = d;
      }
      e = fresh_host(deepest);
    }
    for (const auto& a : node.atoms)
      if (classify_atom(a, w_.lattice) == AtomKind::HostOpaque) w_.concepts[a].insert(e);
    used_hosts_.insert(e);
    return e;
  }

  void fill_role(ElementId x, const REdge& e, const RolePlan* rp) {
    const Count m = e.min, big_m = e.max;
    std::size_t k;
    if (rp && rp->count) {
      k = std::max<Count>(*rp->count, m);
    } else if (seed_ == 0) {
      k = std::max<Count>(m, std::min<Count>(big_m, m + 1));
    } else {
      const Count hi = std::max<Count>(m, std::min<Count>(big_m, m + 2));
      k = std::uniform_int_distribution<Count>(m, hi)(rng_);
    }

    std::set<ElementId> fillers;
    IndividualSet used_inds;
    std::set<ElementId> used_hosts;
    IndividualSet covered;
    auto add = [&](const GraphPlan* steer, std::optional<Individual> must) {
      RootConstraint rc;
      rc.must_be = std::move(must);
      rc.avoid = used_inds;
      if (rp) rc.avoid.insert(rp->avoid.begin(), rp->avoid.end());
      rc.exclude = used_hosts;
      const ElementId f = build(e.restriction, steer, rc);
      fillers.insert(f);
      if (!is_classic(f)) used_hosts.insert(f);
      if (auto ind = w_.individual_of(f)) {
        if (!ind->is_host()) used_inds.insert(*ind);
        covered.insert(*ind);
      }
    };

    if (rp && rp->steer) {
      std::optional<Individual> must;
      if (e.fillers.size() >= big_m) {
        // No room for an extra filler: the steered one must also cover one of F.
        const NodePlan* root_plan = nullptr;
        auto it = rp->steer->nodes.find(e.restriction.root);
        if (it != rp->steer->nodes.end()) root_plan = &it->second;
        for (const auto& f : e.fillers) {
          if (!root_plan || !root_plan->avoid.count(f)) {
            must = f;
            break;
          }
        }
      }
      add(rp->steer.get(), must);
    }
    for (const auto& f : e.fillers)
      if (!covered.count(f)) add(nullptr, f);
    while (congruence_classes(fillers, w_) < k) {
      const std::size_t before = fillers.size();
      add(nullptr, std::nullopt);
      if (fillers.size() == before) throw std::logic_error("construct: filler not fresh");
    }
    w_.roles[e.role][x].insert(fillers.begin(), fillers.end());
  }

  Interpretation& w_;
  const Vocabulary& v_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::size_t classic_count_ = 0, host_count_ = 0;
  IndividualSet used_individuals_;
  std::set<ElementId> used_hosts_;
};

}  // namespace

GraphicalWorld construct_graphical_world(const DescriptionGraph& g, const Description* steer, const Vocabulary& v,
                                         const HostLattice& lattice, std::uint64_t seed) {
  Vocabulary vocab = v;
  vocab.add(g);
  if (steer) vocab.add(*steer);
  GraphicalWorld out;
  out.world.lattice = lattice;
  GraphPlan p;
  if (steer) {
    if (subsumes_graph(*steer, g)) throw std::invalid_argument("construct: the steering description subsumes the graph");
    plan(*steer, g, g.root, p);
  }
  Builder b(out.world, vocab, seed);
  out.distinguished = b.build(g, steer ? &p : nullptr, {});
  b.finish();
  return out;
}

}  // namespace classic
