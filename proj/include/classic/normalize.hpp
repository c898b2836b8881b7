#pragma once

#include <set>
#include <string>
#include <vector>

#include "classic/graph.hpp"
#include "classic/host.hpp"

namespace classic {

/// Order in which local rewrite steps are tried. Both orders reach the same
/// canonical form; Reversed exists to check that empirically.
enum class RuleOrder { Standard, Reversed };

struct CanonContext {
  HostLattice lattice = HostLattice::standard();
  /// Groups of atoms no two of which may share a node.
  std::vector<std::set<std::string>> disjoint_groups;
  RuleOrder order = RuleOrder::Standard;
};

const CanonContext& default_context();

/// Rewrites `g` and every nested restriction graph until no normalization
/// step applies. Inconsistency shows up as an incoherent graph, never an error.
DescriptionGraph canonicalize(DescriptionGraph g, const CanonContext& ctx = default_context());

/// One a-edge merge: the two edges (indices into g.aedges, same source and
/// attribute) become one edge to the merged target, which replaces both old
/// targets everywhere. No cascading.
DescriptionGraph merge_a_edges(const DescriptionGraph& g, std::size_t first, std::size_t second);

/// One r-edge merge on `node`: bounds tightened, restrictions merged, fillers unioned.
GraphNode merge_r_edges(const GraphNode& node, std::size_t first, std::size_t second);

/// True when the node and its nested graphs admit no further step.
bool is_canonical(const DescriptionGraph& g, const CanonContext& ctx = default_context());

}  // namespace classic
