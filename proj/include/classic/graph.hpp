#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classic/ast.hpp"

namespace classic {

using NodeId = std::uint32_t;

/// Filler counts. kUnbounded is the max of an r-edge with no upper bound and
/// orders above every finite count.
using Count = std::uint64_t;
inline constexpr Count kUnbounded = std::numeric_limits<Count>::max();

/// The set of individuals a node may denote, or the universal marker.
class Dom {
 public:
  Dom() = default;
  static Dom universal() { return Dom(); }
  static Dom of(IndividualSet members) {
    Dom d;
    d.members_ = std::move(members);
    return d;
  }

  bool is_universal() const { return !members_.has_value(); }
  /// Precondition: !is_universal().
  const IndividualSet& members() const { return *members_; }
  std::size_t size() const { return members_ ? members_->size() : static_cast<std::size_t>(-1); }
  bool contains(const Individual& i) const { return !members_ || members_->count(i) > 0; }
  bool includes(const IndividualSet& s) const;
  Dom intersect(const Dom& other) const;

  bool operator==(const Dom&) const = default;

 private:
  std::optional<IndividualSet> members_;
};

struct REdge;

struct GraphNode {
  std::set<std::string> atoms;
  std::vector<REdge> redges;
  Dom dom;

  bool incoherent() const;
  bool has_atom(std::string_view a) const { return atoms.find(std::string(a)) != atoms.end(); }
  /// Lookup in a canonical node, whose r-edges are sorted by role.
  const REdge* find_redge(std::string_view role) const;
};

struct AEdge {
  NodeId source = 0;
  NodeId target = 0;
  std::string attribute;
  IndividualSet fillers;
};

/// Rooted attribute island; role restrictions hang off the nodes as nested
/// graphs that share nothing with this one.
struct DescriptionGraph {
  std::vector<GraphNode> nodes;
  std::vector<AEdge> aedges;
  NodeId root = 0;
  bool incoherent = false;

  static DescriptionGraph single(GraphNode node);
  static DescriptionGraph of_atom(std::string atom);
  static DescriptionGraph incoherent_graph();

  const GraphNode& root_node() const { return nodes[root]; }
  GraphNode& root_node() { return nodes[root]; }
  /// Lookup in a canonical graph, whose a-edges are sorted by (source, attribute).
  const AEdge* find_aedge(NodeId source, std::string_view attribute) const;
};

struct REdge {
  std::string role;
  Count min = 0;
  Count max = kUnbounded;
  DescriptionGraph restriction;
  IndividualSet fillers;
};

GraphNode incoherent_node();

/// Atoms unioned, r-edges concatenated as a bag, doms intersected.
GraphNode merge_nodes(const GraphNode& a, const GraphNode& b);

/// Disjoint union of the non-root nodes plus one merged root, which keeps
/// the root id of `a`.
DescriptionGraph merge_graphs(const DescriptionGraph& a, const DescriptionGraph& b);

/// Precondition: `d` is expanded (no named references, primitives or tests).
DescriptionGraph translate(const Description& d);

/// Total count of nodes, a-edges, atoms and r-edges, recursively.
std::size_t graph_size(const DescriptionGraph& g);

/// Deterministic structured dump. Nodes are numbered by a breadth-first walk
/// from the root following a-edges in attribute order, so graphs that differ
/// only in node numbering dump identically once canonical.
nlohmann::ordered_json to_json(const DescriptionGraph& g);
std::string dump(const DescriptionGraph& g);

/// Equality up to node renaming. Exact for canonical graphs, where each
/// (node, attribute) pair has at most one a-edge.
bool isomorphic(const DescriptionGraph& a, const DescriptionGraph& b);

}  // namespace classic
