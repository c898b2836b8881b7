#pragma once

#include "classic/ast.hpp"
#include "classic/graph.hpp"
#include "classic/kb.hpp"
#include "classic/normalize.hpp"

namespace classic {

/// Structural test of an expanded description against a canonical graph.
bool subsumes_graph(const Description& d, const DescriptionGraph& g);
/// Same test with `node` standing in for the root; a-edges stay shared.
bool subsumes_at(const Description& d, const DescriptionGraph& g, NodeId node);

/// Translate and canonicalize an expanded description.
DescriptionGraph canonical_graph(const Description& expanded, const CanonContext& ctx = default_context());

/// Both sides expanded already.
bool subsumes_expanded(const Description& d, const Description& c, const CanonContext& ctx = default_context());

/// Expands both descriptions in one session, so primitives agree.
bool subsumes(const Description& d, const Description& c, const KnowledgeBase& kb = {});
bool equivalent(const Description& d, const Description& c, const KnowledgeBase& kb = {});

}  // namespace classic
