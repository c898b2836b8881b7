#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace classic {

enum class IndividualKind { Classic, Integer, Decimal, String };

/// A classic individual name or a host value literal. Host values are
/// identified by their lexeme, so `2` and `2.0` are different values.
struct Individual {
  IndividualKind kind = IndividualKind::Classic;
  std::string lexeme;

  bool is_host() const { return kind != IndividualKind::Classic; }

  static Individual named(std::string name) { return {IndividualKind::Classic, std::move(name)}; }
  static Individual integer(std::string text) { return {IndividualKind::Integer, std::move(text)}; }
  static Individual decimal(std::string text) { return {IndividualKind::Decimal, std::move(text)}; }
  static Individual string(std::string text) { return {IndividualKind::String, std::move(text)}; }

  auto operator<=>(const Individual&) const = default;
};

using IndividualSet = std::set<Individual>;

/// Source-text form: identifiers and numbers verbatim, strings quoted and escaped.
std::string to_text(const Individual& individual);

enum class Realm { Classic, Host };
enum class PropertyKind { Role, Attribute, Unresolved };

/// Immutable shared box with deep equality, used for recursive AST children.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  const T* get() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_; }

 private:
  std::shared_ptr<const T> ptr_;
};

struct Description;

namespace ast {

enum class BuiltinKind { Thing, ClassicThing, HostThing, Nothing };

struct Builtin {
  BuiltinKind which;
  bool operator==(const Builtin&) const = default;
};
struct ConceptName {
  std::string name;
  bool operator==(const ConceptName&) const = default;
};
struct HostConcept {
  std::string name;
  bool operator==(const HostConcept&) const = default;
};
struct NamedRef {
  std::string name;
  bool operator==(const NamedRef&) const = default;
};
struct And {
  std::vector<Description> conjuncts;
  bool operator==(const And&) const = default;
};
struct All {
  PropertyKind kind;
  std::string property;
  Box<Description> restriction;
  bool operator==(const All&) const = default;
};
struct AtLeast {
  std::uint64_t count;
  std::string role;
  bool operator==(const AtLeast&) const = default;
};
struct AtMost {
  std::uint64_t count;
  std::string role;
  bool operator==(const AtMost&) const = default;
};
struct SameAs {
  std::vector<std::string> left;
  std::vector<std::string> right;
  bool operator==(const SameAs&) const = default;
};
struct Fills {
  PropertyKind kind;
  std::string property;
  Individual filler;
  bool operator==(const Fills&) const = default;
};
struct OneOf {
  std::vector<Individual> members;
  bool operator==(const OneOf&) const = default;
};
struct Primitive {
  Box<Description> body;
  std::string tag;
  bool operator==(const Primitive&) const = default;
};
struct Test {
  std::string function;
  Realm realm;
  bool operator==(const Test&) const = default;
};

}  // namespace ast

struct Description {
  using Node = std::variant<ast::Builtin, ast::ConceptName, ast::HostConcept, ast::NamedRef, ast::And,
                            ast::All, ast::AtLeast, ast::AtMost, ast::SameAs, ast::Fills, ast::OneOf,
                            ast::Primitive, ast::Test>;
  Node node;

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(node); }

  bool operator==(const Description&) const = default;
};

/// Number of constructor occurrences, counting chain and list elements.
std::size_t size(const Description& d);

/// Realm a description's extension is confined to; nullopt when it can span
/// both realms (THING and conjunctions of THING).
std::optional<Realm> realm_of(const Description& d);

// Short builders for tests, generators and the reduction encoder.
namespace dl {
Description thing();
Description classic_thing();
Description host_thing();
Description nothing();
Description atom(std::string name);
Description host(std::string type);
Description named(std::string name);
Description conj(std::vector<Description> conjuncts);
Description all_role(std::string role, Description d);
Description all_attr(std::string attribute, Description d);
Description at_least(std::uint64_t n, std::string role);
Description at_most(std::uint64_t n, std::string role);
Description same_as(std::vector<std::string> left, std::vector<std::string> right);
Description fills_role(std::string role, Individual filler);
Description fills_attr(std::string attribute, Individual filler);
Description one_of(std::vector<Individual> members);
Description primitive(Description body, std::string tag);
Description test(std::string function, Realm realm);
}  // namespace dl

}  // namespace classic
