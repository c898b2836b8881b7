#include "classic/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace classic {

// ---------------------------------------------------------------- vocabulary

void Vocabulary::add(const Description& d) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::ConceptName>) {
          atoms.insert(n.name);
        } else if constexpr (std::is_same_v<T, ast::And>) {
          for (const auto& c : n.conjuncts) add(c);
        } else if constexpr (std::is_same_v<T, ast::All>) {
          (n.kind == PropertyKind::Attribute ? attributes : roles).insert(n.property);
          add(*n.restriction);
        } else if constexpr (std::is_same_v<T, ast::AtLeast> || std::is_same_v<T, ast::AtMost>) {
          roles.insert(n.role);
        } else if constexpr (std::is_same_v<T, ast::SameAs>) {
          attributes.insert(n.left.begin(), n.left.end());
          attributes.insert(n.right.begin(), n.right.end());
        } else if constexpr (std::is_same_v<T, ast::Fills>) {
          (n.kind == PropertyKind::Attribute ? attributes : roles).insert(n.property);
          (n.filler.is_host() ? literals : individuals).insert(n.filler);
        } else if constexpr (std::is_same_v<T, ast::OneOf>) {
          for (const auto& m : n.members) (m.is_host() ? literals : individuals).insert(m);
        } else if constexpr (std::is_same_v<T, ast::Primitive>) {
          add(*n.body);
        }
      },
      d.node);
}

void Vocabulary::add(const DescriptionGraph& g) {
  auto add_individuals = [&](const IndividualSet& s) {
    for (const auto& i : s) (i.is_host() ? literals : individuals).insert(i);
  };
  for (const auto& n : g.nodes) {
    for (const auto& a : n.atoms)
      if (a != kThing && a != kClassicThing && a != kHostThing && a != kNothing) atoms.insert(a);
    if (!n.dom.is_universal()) add_individuals(n.dom.members());
    for (const auto& e : n.redges) {
      roles.insert(e.role);
      add_individuals(e.fillers);
      add(e.restriction);
    }
  }
  for (const auto& e : g.aedges) {
    attributes.insert(e.attribute);
    add_individuals(e.fillers);
  }
}

void Vocabulary::merge(const Vocabulary& o) {
  atoms.insert(o.atoms.begin(), o.atoms.end());
  roles.insert(o.roles.begin(), o.roles.end());
  attributes.insert(o.attributes.begin(), o.attributes.end());
  individuals.insert(o.individuals.begin(), o.individuals.end());
  literals.insert(o.literals.begin(), o.literals.end());
}

// ------------------------------------------------------------ interpretation

namespace {

std::string literal_label(const Individual& v) { return "=" + to_text(v); }

bool is_host_opaque(std::string_view atom) { return atom.starts_with(kHostOpaquePrefix); }

}  // namespace

ElementId Interpretation::add_classic(std::string label) {
  elements.push_back(Element{Realm::Classic, std::move(label), std::nullopt, std::nullopt});
  return static_cast<ElementId>(elements.size() - 1);
}

ElementId Interpretation::add_host(std::string label, std::optional<std::string> type) {
  if (find_label(label)) throw std::logic_error("duplicate host element '" + label + "'");
  elements.push_back(Element{Realm::Host, std::move(label), std::nullopt, std::move(type)});
  return static_cast<ElementId>(elements.size() - 1);
}

ElementId Interpretation::literal(const Individual& value) {
  if (!value.is_host()) throw std::invalid_argument("literal: '" + value.lexeme + "' is not a host value");
  if (auto e = find_literal(value)) return *e;
  elements.push_back(Element{Realm::Host, literal_label(value), value, std::nullopt});
  return static_cast<ElementId>(elements.size() - 1);
}

std::optional<ElementId> Interpretation::find_label(std::string_view label) const {
  for (ElementId i = 0; i < elements.size(); ++i)
    if (elements[i].label == label) return i;
  return std::nullopt;
}

std::optional<ElementId> Interpretation::find_literal(const Individual& value) const {
  for (ElementId i = 0; i < elements.size(); ++i)
    if (elements[i].literal && *elements[i].literal == value) return i;
  return std::nullopt;
}

bool Interpretation::in_host_type(ElementId e, std::string_view type) const {
  const Element& el = elements[e];
  if (el.realm != Realm::Host) return false;
  if (el.literal) return lattice.literal_in(*el.literal, type);
  if (el.host_type) return lattice.is_subtype(*el.host_type, type);
  return false;
}

std::optional<Individual> Interpretation::individual_of(ElementId e) const {
  if (elements[e].literal) return elements[e].literal;
  for (const auto& [ind, ext] : individuals)
    if (ext.count(e)) return ind;
  return std::nullopt;
}

void Interpretation::validate(const Vocabulary* vocabulary) const {
  auto fail = [](const std::string& m) { throw std::logic_error("invalid world: " + m); };
  auto in_range = [&](ElementId e) { return e < elements.size(); };
  std::set<std::string> host_labels;
  for (const auto& el : elements) {
    if (el.realm == Realm::Host && !host_labels.insert(el.label).second) fail("host label repeated: " + el.label);
    if (el.realm == Realm::Classic && (el.literal || el.host_type)) fail("classic element with host data");
    if (el.host_type && !lattice.contains(*el.host_type)) fail("unknown host type " + *el.host_type);
  }
  for (const auto& [atom, ext] : concepts)
    for (auto e : ext) {
      if (!in_range(e)) fail("concept " + atom + " names a missing element");
      if ((elements[e].realm == Realm::Host) != is_host_opaque(atom)) fail("concept " + atom + " crosses realms");
    }
  for (const auto& [role, table] : roles)
    for (const auto& [src, fillers] : table) {
      if (!in_range(src) || elements[src].realm != Realm::Classic) fail("role " + role + " on a non-classic element");
      for (auto f : fillers)
        if (!in_range(f)) fail("role " + role + " names a missing element");
    }
  for (const auto& [attr, table] : attributes) {
    for (const auto& [src, v] : table) {
      if (!in_range(src) || !in_range(v)) fail("attribute " + attr + " names a missing element");
      if (elements[src].realm != Realm::Classic) fail("attribute " + attr + " on a host element");
    }
    for (ElementId e = 0; e < elements.size(); ++e)
      if (elements[e].realm == Realm::Classic && !table.count(e)) fail("attribute " + attr + " not total");
  }
  std::set<ElementId> seen;
  for (const auto& [ind, ext] : individuals) {
    if (ind.is_host()) fail("host value stored as an individual");
    if (ext.empty()) fail("individual " + ind.lexeme + " has an empty extension");
    for (auto e : ext) {
      if (!in_range(e) || elements[e].realm != Realm::Classic) fail("individual " + ind.lexeme + " leaves the classic realm");
      if (!seen.insert(e).second) fail("individual extensions overlap");
    }
  }
  if (vocabulary) {
    for (const auto& a : vocabulary->attributes)
      if (!attributes.count(a)) fail("attribute " + a + " uninterpreted");
    for (const auto& i : vocabulary->individuals)
      if (!individuals.count(i)) fail("individual " + i.lexeme + " uninterpreted");
  }
}

// ---------------------------------------------------------------- evaluation

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Interpretation& w) : w_(w), n_(w.size()), classic_(n_), host_(n_), cls_(n_, -1) {
    for (ElementId i = 0; i < n_; ++i) (w.elements[i].realm == Realm::Classic ? classic_ : host_).set(i);
    int k = 0;
    for (const auto& [ind, ext] : w.individuals) {
      for (auto e : ext) cls_[e] = k;
      ++k;
    }
  }

  ElementSet all() const { return classic_ | host_; }
  ElementSet none() const { return ElementSet(n_); }

  ElementSet set_of(const std::set<ElementId>& s) const {
    ElementSet out(n_);
    for (auto e : s) out.set(e);
    return out;
  }

  ElementSet individual(const Individual& l) const {
    ElementSet out(n_);
    if (l.is_host()) {
      if (auto e = w_.find_literal(l)) out.set(*e);
      return out;
    }
    auto it = w_.individuals.find(l);
    if (it != w_.individuals.end()) out = set_of(it->second);
    return out;
  }

  ElementSet atom(const std::string& a) const {
    if (a == kThing) return all();
    if (a == kClassicThing) return classic_;
    if (a == kHostThing) return host_;
    if (a == kNothing) return none();
    if (w_.lattice.contains(a)) {
      ElementSet out(n_);
      for (ElementId e = 0; e < n_; ++e)
        if (w_.in_host_type(e, a)) out.set(e);
      return out;
    }
    auto it = w_.concepts.find(a);
    ElementSet out = it == w_.concepts.end() ? none() : set_of(it->second);
    return out & (is_host_opaque(a) ? host_ : classic_);
  }

  std::size_t classes(const std::set<ElementId>& fillers) const {
    std::set<int> named;
    std::size_t loose = 0;
    for (auto f : fillers) {
      if (cls_[f] >= 0)
        named.insert(cls_[f]);
      else
        ++loose;
    }
    return named.size() + loose;
  }

  const std::set<ElementId>& fillers(const std::string& role, ElementId e) const {
    static const std::set<ElementId> empty;
    auto it = w_.roles.find(role);
    if (it == w_.roles.end()) return empty;
    auto jt = it->second.find(e);
    return jt == it->second.end() ? empty : jt->second;
  }

  std::optional<ElementId> value(const std::string& attr, ElementId e) const {
    if (w_.elements[e].realm != Realm::Classic) return std::nullopt;
    auto it = w_.attributes.find(attr);
    if (it == w_.attributes.end()) throw std::out_of_range("uninterpreted attribute '" + attr + "'");
    auto jt = it->second.find(e);
    if (jt == it->second.end()) throw std::out_of_range("attribute '" + attr + "' is not total");
    return jt->second;
  }

  std::optional<ElementId> chain(const std::vector<std::string>& attrs, ElementId e) const {
    std::optional<ElementId> cur = e;
    for (const auto& a : attrs) {
      cur = value(a, *cur);
      if (!cur) return std::nullopt;
    }
    return cur;
  }

  ElementSet description(const Description& d) const {
    return std::visit([&](const auto& n) { return eval(n); }, d.node);
  }

  ElementSet node(const GraphNode& n) const {
    ElementSet out = all();
    for (const auto& a : n.atoms) out &= atom(a);
    for (const auto& e : n.redges) {
      if (out.none()) break;
      ElementSet restriction = graph(e.restriction);
      std::vector<ElementSet> filler_exts;
      for (const auto& f : e.fillers) filler_exts.push_back(individual(f));
      for (auto x = out.find_first(); x != ElementSet::npos; x = out.find_next(x)) {
        const auto& fs = fillers(e.role, static_cast<ElementId>(x));
        std::size_t count = classes(fs);
        bool ok = count >= e.min && (e.max == kUnbounded || count <= e.max);
        for (auto f : fs) ok = ok && restriction.test(f);
        for (const auto& fe : filler_exts)
          ok = ok && std::any_of(fs.begin(), fs.end(), [&](ElementId f) { return fe.test(f); });
        if (!ok) out.reset(x);
      }
    }
    if (!n.dom.is_universal()) {
      ElementSet in_dom = none();
      for (const auto& l : n.dom.members()) in_dom |= individual(l);
      out &= in_dom;
    }
    return out;
  }

  ElementSet graph(const DescriptionGraph& g) const {
    ElementSet out = none();
    if (g.incoherent) return out;
    std::vector<ElementSet> exts;
    exts.reserve(g.nodes.size());
    for (const auto& n : g.nodes) exts.push_back(node(n));
    std::vector<ElementSet> filler_ok;
    for (const auto& e : g.aedges) {
      ElementSet ok = all();
      for (const auto& f : e.fillers) ok &= individual(f);
      filler_ok.push_back(std::move(ok));
    }
    const ElementSet& roots = exts[g.root];
    for (auto x = roots.find_first(); x != ElementSet::npos; x = roots.find_next(x)) {
      std::vector<std::optional<ElementId>> y(g.nodes.size());
      y[g.root] = static_cast<ElementId>(x);
      if (witness(g, exts, filler_ok, y)) out.set(x);
    }
    return out;
  }

 private:
  // Extends a partial assignment: forced values first, then a guess for the
  // first node still open.
  bool witness(const DescriptionGraph& g, const std::vector<ElementSet>& exts,
               const std::vector<ElementSet>& filler_ok, std::vector<std::optional<ElementId>>& y) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < g.aedges.size(); ++i) {
        const AEdge& e = g.aedges[i];
        if (!y[e.source]) continue;
        auto v = value(e.attribute, *y[e.source]);
        if (!v || !exts[e.target].test(*v) || !filler_ok[i].test(*v)) return false;
        if (y[e.target]) {
          if (*y[e.target] != *v) return false;
        } else {
          y[e.target] = v;
          changed = true;
        }
      }
    }
    auto open = std::find_if(y.begin(), y.end(), [](const auto& v) { return !v.has_value(); });
    if (open == y.end()) return true;
    const auto idx = static_cast<std::size_t>(open - y.begin());
    const ElementSet& cand = exts[idx];
    for (auto c = cand.find_first(); c != ElementSet::npos; c = cand.find_next(c)) {
      auto trial = y;
      trial[idx] = static_cast<ElementId>(c);
      if (witness(g, exts, filler_ok, trial)) {
        y = std::move(trial);
        return true;
      }
    }
    return false;
  }

  ElementSet eval(const ast::Builtin& b) const {
    switch (b.which) {
      case ast::BuiltinKind::Thing: return all();
      case ast::BuiltinKind::ClassicThing: return classic_;
      case ast::BuiltinKind::HostThing: return host_;
      case ast::BuiltinKind::Nothing: break;
    }
    return none();
  }
  ElementSet eval(const ast::ConceptName& c) const { return atom(c.name); }
  ElementSet eval(const ast::HostConcept& c) const { return atom(c.name); }
  ElementSet eval(const ast::And& a) const {
    ElementSet out = all();
    for (const auto& c : a.conjuncts) out &= description(c);
    return out;
  }
  ElementSet eval(const ast::All& a) const {
    ElementSet inner = description(*a.restriction);
    ElementSet out = classic_;
    for (auto x = out.find_first(); x != ElementSet::npos; x = out.find_next(x)) {
      const auto e = static_cast<ElementId>(x);
      bool ok;
      if (a.kind == PropertyKind::Attribute) {
        ok = inner.test(*value(a.property, e));
      } else {
        const auto& fs = fillers(a.property, e);
        ok = std::all_of(fs.begin(), fs.end(), [&](ElementId f) { return inner.test(f); });
      }
      if (!ok) out.reset(x);
    }
    return out;
  }
  ElementSet count(const std::string& role, std::uint64_t n, bool at_least) const {
    ElementSet out = classic_;
    for (auto x = out.find_first(); x != ElementSet::npos; x = out.find_next(x)) {
      std::size_t c = classes(fillers(role, static_cast<ElementId>(x)));
      if (at_least ? c < n : c > n) out.reset(x);
    }
    return out;
  }
  ElementSet eval(const ast::AtLeast& a) const { return count(a.role, a.count, true); }
  ElementSet eval(const ast::AtMost& a) const { return count(a.role, a.count, false); }
  ElementSet eval(const ast::SameAs& s) const {
    ElementSet out = classic_;
    for (auto x = out.find_first(); x != ElementSet::npos; x = out.find_next(x)) {
      auto l = chain(s.left, static_cast<ElementId>(x));
      auto r = chain(s.right, static_cast<ElementId>(x));
      if (!l || !r || *l != *r) out.reset(x);
    }
    return out;
  }
  ElementSet eval(const ast::Fills& f) const {
    ElementSet target = individual(f.filler);
    ElementSet out = classic_;
    for (auto x = out.find_first(); x != ElementSet::npos; x = out.find_next(x)) {
      const auto e = static_cast<ElementId>(x);
      bool ok;
      if (f.kind == PropertyKind::Attribute) {
        ok = target.test(*value(f.property, e));
      } else {
        const auto& fs = fillers(f.property, e);
        ok = std::any_of(fs.begin(), fs.end(), [&](ElementId v) { return target.test(v); });
      }
      if (!ok) out.reset(x);
    }
    return out;
  }
  ElementSet eval(const ast::OneOf& o) const {
    ElementSet out = none();
    for (const auto& m : o.members) out |= individual(m);
    return out;
  }
  [[noreturn]] ElementSet unexpanded() const { throw std::invalid_argument("eval: description must be expanded"); }
  ElementSet eval(const ast::NamedRef&) const { unexpanded(); }
  ElementSet eval(const ast::Primitive&) const { unexpanded(); }
  ElementSet eval(const ast::Test&) const { unexpanded(); }

  const Interpretation& w_;
  std::size_t n_;
  ElementSet classic_, host_;
  std::vector<int> cls_;
};

}  // namespace

ElementSet eval_description(const Description& d, const Interpretation& w) { return Evaluator(w).description(d); }
ElementSet eval_graph(const DescriptionGraph& g, const Interpretation& w) { return Evaluator(w).graph(g); }
ElementSet eval_node(const GraphNode& n, const Interpretation& w) { return Evaluator(w).node(n); }

std::size_t congruence_classes(const std::set<ElementId>& elements, const Interpretation& w) {
  return Evaluator(w).classes(elements);
}

// ------------------------------------------------------------------- merging

Interpretation merge_worlds(const Interpretation& a, const Interpretation& b) {
  Interpretation out = a;
  std::vector<ElementId> remap(b.size());
  std::set<std::string> classic_labels;
  for (const auto& el : a.elements)
    if (el.realm == Realm::Classic) classic_labels.insert(el.label);
  for (ElementId i = 0; i < b.size(); ++i) {
    const Element& el = b.elements[i];
    if (el.realm == Realm::Host) {
      if (auto existing = out.find_label(el.label)) {
        remap[i] = *existing;
      } else {
        out.elements.push_back(el);
        remap[i] = static_cast<ElementId>(out.elements.size() - 1);
      }
      continue;
    }
    std::string label = el.label;
    while (classic_labels.count(label)) label += "'";
    classic_labels.insert(label);
    remap[i] = out.add_classic(label);
  }
  auto mapped = [&](const std::set<ElementId>& s) {
    std::set<ElementId> r;
    for (auto e : s) r.insert(remap[e]);
    return r;
  };
  for (const auto& [atom, ext] : b.concepts) {
    auto m = mapped(ext);
    out.concepts[atom].insert(m.begin(), m.end());
  }
  for (const auto& [role, table] : b.roles)
    for (const auto& [src, fillers] : table) {
      auto m = mapped(fillers);
      out.roles[role][remap[src]].insert(m.begin(), m.end());
    }
  for (const auto& [attr, table] : b.attributes)
    for (const auto& [src, v] : table) out.attributes[attr][remap[src]] = remap[v];
  for (const auto& [ind, ext] : b.individuals) {
    auto m = mapped(ext);
    out.individuals[ind].insert(m.begin(), m.end());
  }
  return out;
}

// --------------------------------------------------------------- model search

namespace {

// Host elements a brute-force world offers: every literal of the query plus
// one unnamed element per host type and one untyped element.
void add_search_host_realm(Interpretation& w, const Vocabulary& v) {
  for (const auto& l : v.literals) w.literal(l);
  for (const auto& [type, parent] : w.lattice.types()) w.add_host("h:" + type + ":0", type);
  w.add_host("h::0", std::nullopt);
}

}  // namespace

SearchResult bounded_model_search(const DescriptionGraph& g, std::size_t classic_size, std::uint64_t budget,
                                  const HostLattice& lattice) {
  SearchResult result;
  if (g.incoherent) {
    result.exhausted = true;
    return result;
  }
  Vocabulary v;
  v.add(g);
  std::vector<std::string> classic_atoms, host_atoms;
  for (const auto& a : v.atoms) {
    if (lattice.contains(a)) continue;
    (is_host_opaque(a) ? host_atoms : classic_atoms).push_back(a);
  }
  const std::vector<std::string> roles(v.roles.begin(), v.roles.end());
  const std::vector<std::string> attrs(v.attributes.begin(), v.attributes.end());
  const std::vector<Individual> inds(v.individuals.begin(), v.individuals.end());

  bool all_sizes_done = true;
  for (std::size_t c = std::max<std::size_t>(1, inds.size()); c <= classic_size; ++c) {
    Interpretation base;
    base.lattice = lattice;
    for (std::size_t i = 0; i < c; ++i) base.add_classic("c" + std::to_string(i));
    add_search_host_realm(base, v);
    const std::size_t total = base.size();
    const std::size_t hosts = total - c;

    // One digit per free choice; radix 2 for membership bits.
    std::vector<std::size_t> radix;
    for (std::size_t i = 0; i < classic_atoms.size() * c; ++i) radix.push_back(2);
    for (std::size_t i = 0; i < host_atoms.size() * hosts; ++i) radix.push_back(2);
    for (std::size_t i = 0; i < c; ++i) radix.push_back(inds.size() + 1);
    for (std::size_t i = 0; i < roles.size() * c * total; ++i) radix.push_back(2);
    for (std::size_t i = 0; i < attrs.size() * c; ++i) radix.push_back(total);
    std::vector<std::size_t> digit(radix.size(), 0);

    for (;;) {
      if (result.worlds_tried >= budget) {
        all_sizes_done = false;
        break;
      }
      ++result.worlds_tried;
      Interpretation w = base;
      std::size_t k = 0;
      for (const auto& a : classic_atoms)
        for (ElementId e = 0; e < c; ++e)
          if (digit[k++]) w.concepts[a].insert(e);
      for (const auto& a : host_atoms)
        for (std::size_t h = 0; h < hosts; ++h)
          if (digit[k++]) w.concepts[a].insert(static_cast<ElementId>(c + h));
      bool individuals_ok = true;
      for (ElementId e = 0; e < c; ++e) {
        std::size_t which = digit[k++];
        if (which > 0) w.individuals[inds[which - 1]].insert(e);
      }
      for (const auto& ind : inds) individuals_ok = individuals_ok && w.individuals.count(ind);
      for (const auto& r : roles)
        for (ElementId e = 0; e < c; ++e)
          for (ElementId t = 0; t < total; ++t)
            if (digit[k++]) w.roles[r][e].insert(t);
      for (const auto& a : attrs)
        for (ElementId e = 0; e < c; ++e) w.attributes[a][e] = static_cast<ElementId>(digit[k++]);

      if (individuals_ok) {
        ElementSet ext = eval_graph(g, w);
        if (ext.any()) {
          result.model = GraphicalWorld{std::move(w), static_cast<ElementId>(ext.find_first())};
          return result;
        }
      }
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == radix[i]) digit[i++] = 0;
      if (i == digit.size()) break;
    }
    if (!all_sizes_done) break;
  }
  result.exhausted = all_sizes_done;
  return result;
}

// ---------------------------------------------------------------------- json

nlohmann::ordered_json to_json(const Interpretation& w) {
  using J = nlohmann::ordered_json;
  J j;
  J elements = J::array();
  for (ElementId i = 0; i < w.size(); ++i) {
    const Element& el = w.elements[i];
    J e;
    e["id"] = i;
    e["label"] = el.label;
    e["realm"] = el.realm == Realm::Host ? "host" : "classic";
    if (el.literal) e["literal"] = to_text(*el.literal);
    if (el.host_type) e["type"] = *el.host_type;
    elements.push_back(std::move(e));
  }
  j["elements"] = std::move(elements);
  j["concepts"] = J::object();
  for (const auto& [atom, ext] : w.concepts) j["concepts"][atom] = ext;
  j["roles"] = J::object();
  for (const auto& [role, table] : w.roles) {
    J pairs = J::array();
    for (const auto& [src, fillers] : table)
      for (auto f : fillers) pairs.push_back(J::array({src, f}));
    j["roles"][role] = std::move(pairs);
  }
  j["attributes"] = J::object();
  for (const auto& [attr, table] : w.attributes) {
    J pairs = J::array();
    for (const auto& [src, v] : table) pairs.push_back(J::array({src, v}));
    j["attributes"][attr] = std::move(pairs);
  }
  j["individuals"] = J::object();
  for (const auto& [ind, ext] : w.individuals) j["individuals"][ind.lexeme] = ext;
  return j;
}

namespace {

Individual literal_from_text(const std::string& text) {
  if (!text.empty() && text.front() == '"') {
    std::string value;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
      if (text[i] == '\\') ++i;
      value += text[i];
    }
    return Individual::string(value);
  }
  if (text.find('.') != std::string::npos) return Individual::decimal(text);
  return Individual::integer(text);
}

}  // namespace

Interpretation world_from_json(const nlohmann::json& j, const HostLattice& lattice) {
  Interpretation w;
  w.lattice = lattice;
  for (const auto& e : j.at("elements")) {
    Element el;
    el.label = e.at("label").get<std::string>();
    el.realm = e.at("realm").get<std::string>() == "host" ? Realm::Host : Realm::Classic;
    if (e.contains("literal")) el.literal = literal_from_text(e.at("literal").get<std::string>());
    if (e.contains("type")) el.host_type = e.at("type").get<std::string>();
    if (e.at("id").get<ElementId>() != w.elements.size()) throw std::invalid_argument("world: element ids must be dense");
    w.elements.push_back(std::move(el));
  }
  for (const auto& [atom, ext] : j.at("concepts").items()) w.concepts[atom] = ext.get<std::set<ElementId>>();
  for (const auto& [role, pairs] : j.at("roles").items())
    for (const auto& p : pairs) w.roles[role][p.at(0).get<ElementId>()].insert(p.at(1).get<ElementId>());
  for (const auto& [attr, pairs] : j.at("attributes").items())
    for (const auto& p : pairs) w.attributes[attr][p.at(0).get<ElementId>()] = p.at(1).get<ElementId>();
  for (const auto& [name, ext] : j.at("individuals").items())
    w.individuals[Individual::named(name)] = ext.get<std::set<ElementId>>();
  w.validate();
  return w;
}

}  // namespace classic
