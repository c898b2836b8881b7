#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "classic/ast.hpp"

namespace classic {

inline constexpr std::string_view kThing = "THING";
inline constexpr std::string_view kClassicThing = "CLASSIC-THING";
inline constexpr std::string_view kHostThing = "HOST-THING";
inline constexpr std::string_view kNothing = "NOTHING";

// Minted atoms carry a realm prefix that cannot occur in a parsed identifier.
inline constexpr std::string_view kClassicOpaquePrefix = "%c:";
inline constexpr std::string_view kHostOpaquePrefix = "%h:";

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subtype forest over host concept names. Two types overlap only when one
/// is an ancestor of the other, so a forest is exactly the admissible shape.
class HostLattice {
 public:
  /// STRING; INTEGER < REAL < COMPLEX < NUMBER.
  static HostLattice standard();

  void declare(const std::string& name, std::optional<std::string> parent = std::nullopt);

  bool contains(std::string_view name) const { return parent_.find(std::string(name)) != parent_.end(); }
  /// Reflexive-transitive subtype test.
  bool is_subtype(std::string_view sub, std::string_view super) const;
  bool related(std::string_view a, std::string_view b) const { return is_subtype(a, b) || is_subtype(b, a); }
  /// The type itself followed by every strict ancestor.
  std::vector<std::string> ancestors(std::string_view name) const;

  /// INTEGER, REAL or STRING for literals, when the lattice declares them.
  std::optional<std::string> literal_type(const Individual& value) const;
  bool literal_in(const Individual& value, std::string_view type) const;

  const std::map<std::string, std::optional<std::string>>& types() const { return parent_; }

 private:
  std::map<std::string, std::optional<std::string>> parent_;
};

enum class AtomKind { Thing, ClassicThing, HostThing, Nothing, HostType, HostOpaque, Classic };

AtomKind classify_atom(std::string_view atom, const HostLattice& lattice);

inline bool is_host_atom(AtomKind k) {
  return k == AtomKind::HostThing || k == AtomKind::HostType || k == AtomKind::HostOpaque;
}

}  // namespace classic
