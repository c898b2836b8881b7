#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "classic/ast.hpp"
#include "classic/graph.hpp"
#include "classic/host.hpp"

namespace classic {

using ElementId = std::uint32_t;
using ElementSet = boost::dynamic_bitset<>;

/// Host elements are identified across worlds by label; classic elements
/// never are.
struct Element {
  Realm realm = Realm::Classic;
  std::string label;
  std::optional<Individual> literal;    // host literal
  std::optional<std::string> host_type; // fresh host element of this type
};

/// Names a finite world must interpret for a query.
struct Vocabulary {
  std::set<std::string> atoms;  // classic and host-opaque atoms
  std::set<std::string> roles;
  std::set<std::string> attributes;
  IndividualSet individuals;  // classic individuals
  IndividualSet literals;     // host values

  void add(const Description& d);
  void add(const DescriptionGraph& g);
  void merge(const Vocabulary& other);
};

/// A finite world under the set semantics for individuals: each classic
/// individual denotes a non-empty set of classic elements, disjoint from the
/// sets of the other individuals; a host value denotes its own element.
struct Interpretation {
  HostLattice lattice = HostLattice::standard();
  std::vector<Element> elements;
  std::map<std::string, std::set<ElementId>> concepts;
  std::map<std::string, std::map<ElementId, std::set<ElementId>>> roles;
  /// Value per classic element. Attributes are total on the classic realm.
  std::map<std::string, std::map<ElementId, ElementId>> attributes;
  std::map<Individual, std::set<ElementId>> individuals;

  std::size_t size() const { return elements.size(); }
  ElementId add_classic(std::string label);
  ElementId add_host(std::string label, std::optional<std::string> type);
  /// The element of a host value, created on first use.
  ElementId literal(const Individual& value);
  std::optional<ElementId> find_label(std::string_view label) const;
  std::optional<ElementId> find_literal(const Individual& value) const;

  bool in_host_type(ElementId e, std::string_view type) const;
  /// Classic individual an element belongs to, if any.
  std::optional<Individual> individual_of(ElementId e) const;

  /// Throws std::logic_error naming the first broken world invariant.
  void validate(const Vocabulary* vocabulary = nullptr) const;
};

/// Precondition: `d` expanded; every attribute of `d` interpreted.
ElementSet eval_description(const Description& d, const Interpretation& w);
ElementSet eval_graph(const DescriptionGraph& g, const Interpretation& w);
ElementSet eval_node(const GraphNode& n, const Interpretation& w);

/// Non-congruent count: elements of one individual count once.
std::size_t congruence_classes(const std::set<ElementId>& elements, const Interpretation& w);

/// Classic realms side by side, host realms united by label.
Interpretation merge_worlds(const Interpretation& a, const Interpretation& b);

struct WorldParams {
  std::size_t free_classic = 3;    // classic elements outside every individual
  std::size_t max_individual = 3;  // elements per individual, drawn from 1..max
  std::size_t fresh_host = 2;      // unnamed host elements per host type, plus untyped ones
  double concept_density = 0.5;
  double role_density = 0.3;
};

Interpretation random_world(const Vocabulary& v, std::uint64_t seed, const WorldParams& p = {},
                            const HostLattice& lattice = HostLattice::standard());

struct GraphicalWorld {
  Interpretation world;
  ElementId distinguished = 0;
};

/// Builds a world whose distinguished element lies in the canonical graph
/// `g`. With `steer`, which must fail to subsume `g`, the free choices are
/// made so the element also lies outside `steer`. `seed` varies the
/// unconstrained choices; 0 picks the first admissible option everywhere.
GraphicalWorld construct_graphical_world(const DescriptionGraph& g, const Description* steer,
                                         const Vocabulary& v, const HostLattice& lattice = HostLattice::standard(),
                                         std::uint64_t seed = 0);

struct SearchResult {
  std::optional<GraphicalWorld> model;
  std::uint64_t worlds_tried = 0;
  bool exhausted = false;  // the whole space was enumerated
};

/// Exhaustive enumeration of worlds with at most `classic_size` classic
/// elements over the vocabulary of `g`, stopping at the first world in
/// which `g` has a non-empty extension or after `budget` worlds.
SearchResult bounded_model_search(const DescriptionGraph& g, std::size_t classic_size,
                                  std::uint64_t budget = 2'000'000,
                                  const HostLattice& lattice = HostLattice::standard());

nlohmann::ordered_json to_json(const Interpretation& w);
Interpretation world_from_json(const nlohmann::json& j, const HostLattice& lattice = HostLattice::standard());

}  // namespace classic
