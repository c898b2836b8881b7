#include "classic/host.hpp"

namespace classic {

HostLattice HostLattice::standard() {
  HostLattice lattice;
  lattice.declare("STRING");
  lattice.declare("NUMBER");
  lattice.declare("COMPLEX", "NUMBER");
  lattice.declare("REAL", "COMPLEX");
  lattice.declare("INTEGER", "REAL");
  return lattice;
}

void HostLattice::declare(const std::string& name, std::optional<std::string> parent) {
  if (contains(name)) throw LatticeError("host type '" + name + "' declared twice");
  if (parent && !contains(*parent))
    throw LatticeError("host type '" + name + "' names unknown parent '" + *parent + "'");
  parent_.emplace(name, std::move(parent));
}

bool HostLattice::is_subtype(std::string_view sub, std::string_view super) const {
  auto it = parent_.find(std::string(sub));
  while (it != parent_.end()) {
    if (it->first == super) return true;
    if (!it->second) return false;
    it = parent_.find(*it->second);
  }
  return false;
}

std::vector<std::string> HostLattice::ancestors(std::string_view name) const {
  std::vector<std::string> out;
  auto it = parent_.find(std::string(name));
  while (it != parent_.end()) {
    out.push_back(it->first);
    if (!it->second) break;
    it = parent_.find(*it->second);
  }
  return out;
}

std::optional<std::string> HostLattice::literal_type(const Individual& value) const {
  const char* type = nullptr;
  switch (value.kind) {
    case IndividualKind::Integer: type = "INTEGER"; break;
    case IndividualKind::Decimal: type = "REAL"; break;
    case IndividualKind::String: type = "STRING"; break;
    case IndividualKind::Classic: return std::nullopt;
  }
  if (!contains(type)) return std::nullopt;
  return std::string(type);
}

bool HostLattice::literal_in(const Individual& value, std::string_view type) const {
  auto own = literal_type(value);
  return own && is_subtype(*own, type);
}

AtomKind classify_atom(std::string_view atom, const HostLattice& lattice) {
  if (atom == kThing) return AtomKind::Thing;
  if (atom == kClassicThing) return AtomKind::ClassicThing;
  if (atom == kHostThing) return AtomKind::HostThing;
  if (atom == kNothing) return AtomKind::Nothing;
  if (atom.starts_with(kHostOpaquePrefix)) return AtomKind::HostOpaque;
  if (atom.starts_with(kClassicOpaquePrefix)) return AtomKind::Classic;
  if (lattice.contains(atom)) return AtomKind::HostType;
  return AtomKind::Classic;
}

}  // namespace classic
