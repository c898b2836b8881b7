#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classic/ast.hpp"
#include "classic/graph.hpp"
#include "classic/host.hpp"
#include "classic/normalize.hpp"

namespace classic {

class KbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KnowledgeBase {
  std::set<std::string> roles;
  std::set<std::string> attributes;
  std::set<std::string> individuals;
  HostLattice lattice = HostLattice::standard();
  /// Named concepts in declaration order; references are NamedRef nodes.
  std::vector<std::pair<std::string, Description>> named;
  /// Disjointness groups, already resolved to atoms.
  std::vector<std::set<std::string>> disjoint_groups;

  const Description* find_named(std::string_view name) const;
  CanonContext context() const;
};

/// Rewrites named references, primitives and tests away. One expander is
/// one session: primitive tags seen through it must keep equivalent bodies.
class Expander {
 public:
  explicit Expander(const KnowledgeBase& kb, std::size_t max_size = 1'000'000);

  Description expand(const Description& d);

 private:
  Description rewrite(const Description& d, std::vector<std::string>& stack);
  Description rewrite_primitive(const ast::Primitive& p, std::vector<std::string>& stack);

  const KnowledgeBase& kb_;
  std::size_t max_size_;
  std::size_t produced_ = 0;
  std::map<std::string, Description> primitive_bodies_;
};

Description expand(const Description& d, const KnowledgeBase& kb);

/// Atom minted for a primitive tag; the realm decides the opaque prefix.
std::string primitive_atom(const std::string& tag, Realm realm);
std::string test_atom(const std::string& function, Realm realm);

/// Marks nodes hitting a disjointness group twice incoherent, then
/// re-canonicalizes so the incoherence propagates.
DescriptionGraph apply_disjointness(DescriptionGraph g, const KnowledgeBase& kb);

struct TaxonomyNode {
  std::vector<std::string> members;
  std::vector<std::size_t> parents;
};

/// Node 0 is THING (members empty unless some concept is equivalent to it).
struct Taxonomy {
  std::vector<TaxonomyNode> nodes;
};

Taxonomy classify(const KnowledgeBase& kb);
nlohmann::ordered_json to_json(const Taxonomy& t);

}  // namespace classic
