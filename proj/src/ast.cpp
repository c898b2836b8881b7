#include "classic/ast.hpp"

#include <stdexcept>

#include "classic/host.hpp"

namespace classic {

std::string to_text(const Individual& individual) {
  if (individual.kind != IndividualKind::String) return individual.lexeme;
  std::string out = "\"";
  for (char c : individual.lexeme) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::size_t size(const Description& d) {
  return std::visit(
      Overloaded{
          [](const ast::And& a) {
            std::size_t n = 1;
            for (const auto& c : a.conjuncts) n += size(c);
            return n;
          },
          [](const ast::All& a) { return 2 + size(*a.restriction); },
          [](const ast::Primitive& p) { return 2 + size(*p.body); },
          [](const ast::SameAs& s) { return 1 + s.left.size() + s.right.size(); },
          [](const ast::OneOf& o) { return 1 + o.members.size(); },
          [](const ast::AtLeast&) -> std::size_t { return 3; },
          [](const ast::AtMost&) -> std::size_t { return 3; },
          [](const ast::Fills&) -> std::size_t { return 3; },
          [](const auto&) -> std::size_t { return 1; },
      },
      d.node);
}

std::optional<Realm> realm_of(const Description& d) {
  return std::visit(
      Overloaded{
          [](const ast::Builtin& b) -> std::optional<Realm> {
            switch (b.which) {
              case ast::BuiltinKind::Thing: return std::nullopt;
              case ast::BuiltinKind::HostThing: return Realm::Host;
              default: return Realm::Classic;
            }
          },
          [](const ast::ConceptName& c) -> std::optional<Realm> {
            if (std::string_view(c.name).starts_with(kHostOpaquePrefix)) return Realm::Host;
            return Realm::Classic;
          },
          [](const ast::HostConcept&) -> std::optional<Realm> { return Realm::Host; },
          [](const ast::And& a) -> std::optional<Realm> {
            for (const auto& c : a.conjuncts)
              if (auto r = realm_of(c)) return r;
            return std::nullopt;
          },
          [](const ast::OneOf& o) -> std::optional<Realm> {
            if (!o.members.empty() && o.members.front().is_host()) return Realm::Host;
            return Realm::Classic;
          },
          [](const ast::Primitive& p) -> std::optional<Realm> {
            return realm_of(*p.body).value_or(Realm::Classic);
          },
          [](const ast::Test& t) -> std::optional<Realm> { return t.realm; },
          [](const ast::NamedRef&) -> std::optional<Realm> {
            throw std::invalid_argument("realm_of: description is not expanded");
          },
          [](const auto&) -> std::optional<Realm> { return Realm::Classic; },
      },
      d.node);
}

namespace dl {

Description thing() { return {ast::Builtin{ast::BuiltinKind::Thing}}; }
Description classic_thing() { return {ast::Builtin{ast::BuiltinKind::ClassicThing}}; }
Description host_thing() { return {ast::Builtin{ast::BuiltinKind::HostThing}}; }
Description nothing() { return {ast::Builtin{ast::BuiltinKind::Nothing}}; }
Description atom(std::string name) { return {ast::ConceptName{std::move(name)}}; }
Description host(std::string type) { return {ast::HostConcept{std::move(type)}}; }
Description named(std::string name) { return {ast::NamedRef{std::move(name)}}; }
Description conj(std::vector<Description> conjuncts) { return {ast::And{std::move(conjuncts)}}; }
Description all_role(std::string role, Description d) {
  return {ast::All{PropertyKind::Role, std::move(role), std::move(d)}};
}
Description all_attr(std::string attribute, Description d) {
  return {ast::All{PropertyKind::Attribute, std::move(attribute), std::move(d)}};
}
Description at_least(std::uint64_t n, std::string role) { return {ast::AtLeast{n, std::move(role)}}; }
Description at_most(std::uint64_t n, std::string role) { return {ast::AtMost{n, std::move(role)}}; }
Description same_as(std::vector<std::string> left, std::vector<std::string> right) {
  return {ast::SameAs{std::move(left), std::move(right)}};
}
Description fills_role(std::string role, Individual filler) {
  return {ast::Fills{PropertyKind::Role, std::move(role), std::move(filler)}};
}
Description fills_attr(std::string attribute, Individual filler) {
  return {ast::Fills{PropertyKind::Attribute, std::move(attribute), std::move(filler)}};
}
Description one_of(std::vector<Individual> members) { return {ast::OneOf{std::move(members)}}; }
Description primitive(Description body, std::string tag) {
  return {ast::Primitive{std::move(body), std::move(tag)}};
}
Description test(std::string function, Realm realm) { return {ast::Test{std::move(function), realm}}; }

}  // namespace dl
}  // namespace classic
