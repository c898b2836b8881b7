#include "classic/normalize.hpp"

#include <algorithm>
#include <map>
#include <iterator>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace classic {

const CanonContext& default_context() {
  static const CanonContext ctx;
  return ctx;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool is_canonical_incoherent(const GraphNode& n) {
  return n.atoms.size() == 1 && n.redges.empty() && n.dom.is_universal();
}

// Rebuilds the node list after unions: one node per class, merged in index
// order; a-edges remapped and deduplicated per (source, attribute).
bool rebuild(DescriptionGraph& g, UnionFind& uf) {
  const std::size_t n = g.nodes.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> new_id(n, kUnset);
  std::vector<GraphNode> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (new_id[r] == kUnset) {
      new_id[r] = nodes.size();
      nodes.push_back(std::move(g.nodes[i]));
    } else {
      nodes[new_id[r]] = merge_nodes(nodes[new_id[r]], g.nodes[i]);
    }
  }
  const bool shrunk = nodes.size() != n;

  std::map<std::pair<NodeId, std::string>, std::size_t> index;
  std::vector<AEdge> edges;
  edges.reserve(g.aedges.size());
  for (auto& e : g.aedges) {
    auto src = static_cast<NodeId>(new_id[uf.find(e.source)]);
    auto dst = static_cast<NodeId>(new_id[uf.find(e.target)]);
    auto [it, inserted] = index.emplace(std::pair{src, e.attribute}, edges.size());
    if (inserted) {
      edges.push_back(AEdge{src, dst, std::move(e.attribute), std::move(e.fillers)});
    } else {
      auto& kept = edges[it->second];
      if (kept.target != dst) throw std::logic_error("rebuild: congruence closure left distinct targets");
      kept.fillers.insert(e.fillers.begin(), e.fillers.end());
    }
  }
  const bool deduped = edges.size() != g.aedges.size();
  g.root = static_cast<NodeId>(new_id[uf.find(g.root)]);
  g.nodes = std::move(nodes);
  g.aedges = std::move(edges);
  return shrunk || deduped;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const CanonContext& ctx) : ctx_(ctx), reversed_(ctx.order == RuleOrder::Reversed) {}

  // Returns true if anything changed.
  bool normalize(DescriptionGraph& g) {
    if (g.incoherent) {
      if (g.nodes.size() == 1 && is_canonical_incoherent(g.nodes[0]) && g.aedges.empty()) return false;
      g = DescriptionGraph::incoherent_graph();
      return true;
    }
    bool any = false;
    for (;;) {
      bool changed = false;
      for (auto& node : g.nodes)
        for (auto& e : node.redges) changed |= normalize(e.restriction);

      bool incoherent = false;
      if (!reversed_) {
        changed |= local_steps(g);
        changed |= aedge_steps(g, incoherent);
      } else {
        changed |= aedge_steps(g, incoherent);
        changed |= local_steps(g);
      }
      // An incoherent node anywhere empties the whole graph.
      if (incoherent || std::any_of(g.nodes.begin(), g.nodes.end(), [](const GraphNode& n) { return n.incoherent(); })) {
        g = DescriptionGraph::incoherent_graph();
        return true;
      }
      if (!changed) break;
      any = true;
    }
    std::sort(g.aedges.begin(), g.aedges.end(), [](const AEdge& a, const AEdge& b) {
      return std::tie(a.source, a.attribute) < std::tie(b.source, b.attribute);
    });
    return any;
  }

  bool node_steps(GraphNode& n) {
    if (n.incoherent()) {
      if (is_canonical_incoherent(n)) return false;
      n = incoherent_node();
      return true;
    }
    bool changed = close_atoms(n);
    if (atoms_conflict(n) || (!n.dom.is_universal() && n.dom.members().empty())) {
      n = incoherent_node();
      return true;
    }
    changed |= drop_foreign_host_values(n);
    if (!n.dom.is_universal() && n.dom.members().empty()) {
      n = incoherent_node();
      return true;
    }
    if (!reversed_) changed |= merge_redges(n);
    for (std::size_t k = 0; k < n.redges.size(); ++k) {
      auto& e = n.redges[reversed_ ? n.redges.size() - 1 - k : k];
      auto [edge_changed, node_incoherent] = redge_steps(e);
      changed |= edge_changed;
      if (node_incoherent) {
        n = incoherent_node();
        return true;
      }
    }
    if (reversed_) changed |= merge_redges(n);
    return changed;
  }

 private:
  bool local_steps(DescriptionGraph& g) {
    bool changed = false;
    const std::size_t n = g.nodes.size();
    for (std::size_t k = 0; k < n; ++k) changed |= node_steps(g.nodes[reversed_ ? n - 1 - k : k]);
    return changed;
  }

  // Realm and host-type upward closure.
  bool close_atoms(GraphNode& n) {
    std::set<std::string> extra;
    for (const auto& a : n.atoms) {
      switch (classify_atom(a, ctx_.lattice)) {
        case AtomKind::HostType:
          extra.insert(std::string(kHostThing));
          for (auto& anc : ctx_.lattice.ancestors(a)) extra.insert(std::move(anc));
          break;
        case AtomKind::HostOpaque: extra.insert(std::string(kHostThing)); break;
        case AtomKind::Classic: extra.insert(std::string(kClassicThing)); break;
        default: break;
      }
    }
    // A dom of host values implies every type shared by all of them.
    if (!n.dom.is_universal() && !n.dom.members().empty() && n.dom.members().begin()->is_host()) {
      std::optional<std::set<std::string>> common;
      for (const auto& v : n.dom.members()) {
        std::set<std::string> types;
        if (auto t = ctx_.lattice.literal_type(v)) {
          auto anc = ctx_.lattice.ancestors(*t);
          types.insert(anc.begin(), anc.end());
        }
        if (!common) {
          common = std::move(types);
        } else {
          std::set<std::string> kept;
          std::set_intersection(common->begin(), common->end(), types.begin(), types.end(),
                                std::inserter(kept, kept.end()));
          common = std::move(kept);
        }
      }
      extra.insert(std::string(kHostThing));
      extra.insert(common->begin(), common->end());
    }
    const auto before = n.atoms.size();
    n.atoms.insert(extra.begin(), extra.end());
    return n.atoms.size() != before;
  }

  // Clashing realms, host types or declared-disjoint atoms.
  bool atoms_conflict(const GraphNode& n) const {
    if (n.has_atom(kHostThing) && n.has_atom(kClassicThing)) return true;
    std::vector<const std::string*> host_types;
    for (const auto& a : n.atoms)
      if (classify_atom(a, ctx_.lattice) == AtomKind::HostType) host_types.push_back(&a);
    for (std::size_t i = 0; i < host_types.size(); ++i)
      for (std::size_t j = i + 1; j < host_types.size(); ++j)
        if (!ctx_.lattice.related(*host_types[i], *host_types[j])) return true;
    for (const auto& group : ctx_.disjoint_groups) {
      std::size_t hits = 0;
      for (const auto& a : group) hits += n.atoms.count(a);
      if (hits >= 2) return true;
    }
    return false;
  }

  bool host_value_in_atom(const Individual& v, const std::string& atom) const {
    switch (classify_atom(atom, ctx_.lattice)) {
      case AtomKind::Thing:
      case AtomKind::HostThing:
      case AtomKind::HostOpaque: return true;
      case AtomKind::HostType: return ctx_.lattice.literal_in(v, atom);
      default: return false;
    }
  }

  bool host_value_in_atoms(const Individual& v, const GraphNode& n) const {
    return std::all_of(n.atoms.begin(), n.atoms.end(), [&](const std::string& a) { return host_value_in_atom(v, a); });
  }

  // Host values outside the node's host types leave the dom, as do classic
  // individuals of a host node.
  bool drop_foreign_host_values(GraphNode& n) const {
    if (n.dom.is_universal()) return false;
    const bool host_node = n.has_atom(kHostThing);
    IndividualSet kept;
    for (const auto& v : n.dom.members())
      if (v.is_host() ? host_value_in_atoms(v, n) : !host_node) kept.insert(v);
    if (kept.size() == n.dom.members().size()) return false;
    n.dom = Dom::of(std::move(kept));
    return true;
  }

  // One r-edge per role.
  bool merge_redges(GraphNode& n) const {
    if (n.redges.size() < 2) return false;
    std::stable_sort(n.redges.begin(), n.redges.end(), [](const REdge& a, const REdge& b) { return a.role < b.role; });
    std::vector<REdge> merged;
    merged.reserve(n.redges.size());
    for (auto& e : n.redges) {
      if (!merged.empty() && merged.back().role == e.role) {
        auto& m = merged.back();
        m.min = std::max(m.min, e.min);
        m.max = std::min(m.max, e.max);
        m.restriction = merge_graphs(m.restriction, e.restriction);
        m.fillers.insert(e.fillers.begin(), e.fillers.end());
      } else {
        merged.push_back(std::move(e));
      }
    }
    const bool changed = merged.size() != n.redges.size();
    n.redges = std::move(merged);
    return changed;
  }

  // Local rules on one r-edge; second is "mark the owning node incoherent".
  std::pair<bool, bool> redge_steps(REdge& e) const {
    bool changed = false;
    auto empty_restriction = [&] {
      if (e.restriction.incoherent && e.max != 0) {
        e.max = 0;
        changed = true;
      }
      if (e.max == 0 && !e.restriction.incoherent) {
        e.restriction = DescriptionGraph::incoherent_graph();
        changed = true;
      }
    };
    auto fillers_raise_min = [&] {
      if (e.min < e.fillers.size()) {
        e.min = e.fillers.size();
        changed = true;
      }
    };
    auto dom_caps_max = [&] {
      const Dom& dom = e.restriction.root_node().dom;
      if (!e.restriction.incoherent && !dom.is_universal() && e.max > dom.size()) {
        e.max = dom.size();
        changed = true;
      }
    };
    auto dom_becomes_fillers = [&] {
      const Dom& dom = e.restriction.root_node().dom;
      if (!e.restriction.incoherent && !dom.is_universal() && e.min >= dom.size() &&
          !std::includes(e.fillers.begin(), e.fillers.end(), dom.members().begin(), dom.members().end())) {
        e.fillers.insert(dom.members().begin(), dom.members().end());
        changed = true;
      }
    };
    auto fillers_narrow_dom = [&] {
      if (e.restriction.incoherent || e.max != e.fillers.size()) return;
      GraphNode& root = e.restriction.root_node();
      Dom narrowed = root.dom.intersect(Dom::of(e.fillers));
      if (!(narrowed == root.dom)) {
        root.dom = std::move(narrowed);
        changed = true;
      }
    };
    // Fillers outside the restriction's dom or realm, or any filler at all
    // under an empty restriction.
    auto fillers_impossible = [&] {
      if (e.restriction.incoherent) return !e.fillers.empty();
      const GraphNode& root = e.restriction.root_node();
      if (!root.dom.includes(e.fillers)) return true;
      for (const auto& f : e.fillers)
        if (f.is_host() ? !host_value_in_atoms(f, root) : root.has_atom(kHostThing)) return true;
      return false;
    };
    if (!reversed_) {
      empty_restriction();
      fillers_raise_min();
      dom_caps_max();
      dom_becomes_fillers();
      fillers_narrow_dom();
      if (fillers_impossible() || e.min > e.max) return {true, true};
    } else {
      if (e.min > e.max || fillers_impossible()) return {true, true};
      fillers_narrow_dom();
      dom_becomes_fillers();
      dom_caps_max();
      fillers_raise_min();
      empty_restriction();
    }
    return {changed, false};
  }

  // One a-edge per attribute via union-find, then a-edge fillers against
  // target doms.
  bool aedge_steps(DescriptionGraph& g, bool& incoherent) {
    bool changed = merge_aedges(g);
    const std::size_t m = g.aedges.size();
    for (std::size_t k = 0; k < m; ++k) {
      auto& e = g.aedges[reversed_ ? m - 1 - k : k];
      GraphNode& target = g.nodes[e.target];
      if (target.incoherent()) continue;
      if (e.fillers.size() > 1) {
        incoherent = true;
        return true;
      }
      if (!e.fillers.empty() && target.dom.is_universal()) {
        target.dom = Dom::of(e.fillers);
        changed = true;
      }
      if (!target.dom.includes(e.fillers)) {
        incoherent = true;
        return true;
      }
      if (!target.dom.is_universal() && target.dom.size() == 1 && e.fillers != target.dom.members()) {
        e.fillers.insert(target.dom.members().begin(), target.dom.members().end());
        changed = true;
      }
    }
    return changed;
  }

  bool merge_aedges(DescriptionGraph& g) {
    UnionFind uf(g.nodes.size());
    bool united = false;
    // A node whose dom is a single host value denotes that one value, so all
    // such nodes for the same value coincide.
    std::map<Individual, std::size_t> host_singletons;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const auto& n = g.nodes[i];
      if (n.incoherent() || n.dom.is_universal() || n.dom.size() != 1) continue;
      const Individual& v = *n.dom.members().begin();
      if (!v.is_host()) continue;
      auto [it, inserted] = host_singletons.emplace(v, i);
      if (!inserted) united |= uf.unite(it->second, i);
    }
    for (bool again = true; again;) {
      again = false;
      std::map<std::pair<std::size_t, std::string_view>, std::size_t> first;
      for (const auto& e : g.aedges) {
        auto [it, inserted] = first.emplace(std::pair{uf.find(e.source), std::string_view(e.attribute)}, e.target);
        if (!inserted && uf.unite(it->second, e.target)) again = united = true;
      }
    }
    if (!united) {
      // Parallel duplicates still need collapsing.
      std::set<std::pair<NodeId, std::string_view>> seen;
      bool dup = false;
      for (const auto& e : g.aedges) dup |= !seen.emplace(e.source, e.attribute).second;
      if (!dup) return false;
    }
    return rebuild(g, uf);
  }

  const CanonContext& ctx_;
  bool reversed_;
};

}  // namespace

DescriptionGraph canonicalize(DescriptionGraph g, const CanonContext& ctx) {
  Canonicalizer(ctx).normalize(g);
  return g;
}

bool is_canonical(const DescriptionGraph& g, const CanonContext& ctx) {
  DescriptionGraph copy = g;
  return !Canonicalizer(ctx).normalize(copy);
}

DescriptionGraph merge_a_edges(const DescriptionGraph& g, std::size_t first, std::size_t second) {
  if (first == second || first >= g.aedges.size() || second >= g.aedges.size())
    throw std::invalid_argument("merge_a_edges: need two distinct edge indices");
  const AEdge& e1 = g.aedges[first];
  const AEdge& e2 = g.aedges[second];
  if (e1.source != e2.source || e1.attribute != e2.attribute)
    throw std::invalid_argument("merge_a_edges: edges differ in source or attribute");

  DescriptionGraph out;
  const NodeId keep = std::min(e1.target, e2.target);
  const NodeId drop = std::max(e1.target, e2.target);
  auto remap = [&](NodeId id) -> NodeId {
    if (keep == drop) return id;
    if (id == drop) return keep;
    return id > drop ? id - 1 : id;
  };
  for (NodeId i = 0; i < g.nodes.size(); ++i) {
    if (keep != drop && i == drop) continue;
    out.nodes.push_back(i == keep && keep != drop ? merge_nodes(g.nodes[keep], g.nodes[drop]) : g.nodes[i]);
  }
  for (std::size_t i = 0; i < g.aedges.size(); ++i) {
    if (i == second) continue;
    AEdge e = g.aedges[i];
    if (i == first) e.fillers.insert(e2.fillers.begin(), e2.fillers.end());
    e.source = remap(e.source);
    e.target = remap(e.target);
    out.aedges.push_back(std::move(e));
  }
  out.root = remap(g.root);
  return out;
}

GraphNode merge_r_edges(const GraphNode& node, std::size_t first, std::size_t second) {
  if (first == second || first >= node.redges.size() || second >= node.redges.size())
    throw std::invalid_argument("merge_r_edges: need two distinct edge indices");
  const REdge& a = node.redges[first];
  const REdge& b = node.redges[second];
  if (a.role != b.role) throw std::invalid_argument("merge_r_edges: roles differ");
  REdge merged{a.role, std::max(a.min, b.min), std::min(a.max, b.max), merge_graphs(a.restriction, b.restriction),
               a.fillers};
  merged.fillers.insert(b.fillers.begin(), b.fillers.end());
  GraphNode out = node;
  out.redges[first] = std::move(merged);
  out.redges.erase(out.redges.begin() + static_cast<std::ptrdiff_t>(second));
  return out;
}

}  // namespace classic
