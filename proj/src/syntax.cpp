#include "classic/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace classic {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t position, std::vector<std::string> expected,
                       std::size_t line)
    : std::runtime_error(std::move(message)), position_(position), line_(line), expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Int, Decimal, String, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '!' || c == '?';
}

std::string token_name(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string literal";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token t;
    t.pos = pos_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (c == '(' || c == ')' || c == ',') {
      t.kind = c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : Tok::Comma;
      t.text = std::string(1, c);
      ++pos_;
      return t;
    }
    if (ident_start(c)) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      t.kind = Tok::Ident;
      t.text = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::size_t end = pos_ + (c == '-' ? 1 : 0);
      auto digits = [&] {
        std::size_t start = end;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        return end > start;
      };
      if (!digits()) throw ParseError("malformed number", pos_, {"digit"});
      t.kind = Tok::Int;
      if (end < text_.size() && text_[end] == '.') {
        ++end;
        if (!digits()) throw ParseError("malformed decimal", end, {"digit"});
        t.kind = Tok::Decimal;
      }
      t.text = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      return t;
    }
    if (c == '"') {
      std::size_t i = pos_ + 1;
      std::string value;
      for (;;) {
        if (i >= text_.size()) throw ParseError("unterminated string literal", pos_, {"'\"'"});
        char d = text_[i++];
        if (d == '"') break;
        if (d == '\\') {
          if (i >= text_.size()) throw ParseError("unterminated escape", i, {"'\"'", "'\\\\'"});
          char e = text_[i++];
          if (e != '"' && e != '\\') throw ParseError("unknown escape", i - 1, {"'\"'", "'\\\\'"});
          value += e;
        } else {
          value += d;
        }
      }
      t.kind = Tok::String;
      t.text = std::move(value);
      pos_ = i;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

const std::set<std::string, std::less<>> kKeywords = {
    "and",  "all",     "at-least", "at-most",       "same-as",    "fills",     "one-of",
    "primitive", "test", "thing", "classic-thing", "host-thing", "nothing",
};

std::optional<ast::BuiltinKind> builtin_of(std::string_view word) {
  if (word == "thing" || word == "THING") return ast::BuiltinKind::Thing;
  if (word == "classic-thing" || word == "CLASSIC-THING") return ast::BuiltinKind::ClassicThing;
  if (word == "host-thing" || word == "HOST-THING") return ast::BuiltinKind::HostThing;
  if (word == "nothing" || word == "NOTHING") return ast::BuiltinKind::Nothing;
  return std::nullopt;
}

// Where an undeclared property name was seen, across all texts of one query.
struct PropertyUses {
  std::map<std::string, std::size_t> counted;  // name -> first position
  std::map<std::string, std::size_t> chained;
};

class Parser {
 public:
  Parser(std::string_view text, const KnowledgeBase& kb, const std::set<std::string>& concept_names,
         PropertyUses& uses)
      : lexer_(text), kb_(kb), concept_names_(concept_names), uses_(uses) {
    advance();
  }

  Description parse_all() {
    Description d = desc();
    if (tok_.kind != Tok::End) fail({"end of input"});
    return d;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw ParseError("expected " + describe_expected(expected) + ", found " + token_name(tok_), tok_.pos,
                     std::move(expected));
  }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) { throw ParseError(message, pos); }

  void expect(Tok kind, const char* shown) {
    if (tok_.kind != kind) fail({shown});
    advance();
  }

  Token take_ident(const char* what) {
    if (tok_.kind != Tok::Ident) fail({what});
    Token t = tok_;
    advance();
    return t;
  }

  bool is_declared_property(const std::string& name) const {
    return kb_.roles.count(name) || kb_.attributes.count(name);
  }

  Description desc() {
    if (tok_.kind != Tok::Ident) fail({"description"});
    Token head = tok_;
    advance();
    if (auto b = builtin_of(head.text)) return Description{ast::Builtin{*b}};
    const std::string& w = head.text;
    if (w == "and") return and_form();
    if (w == "all") return all_form();
    if (w == "at-least" || w == "at-most") return count_form(w == "at-least", head.pos);
    if (w == "same-as") return same_as_form();
    if (w == "fills") return fills_form();
    if (w == "one-of") return one_of_form(head.pos);
    if (w == "primitive") return primitive_form();
    if (w == "test") return test_form();
    return name_ref(head);
  }

  Description name_ref(const Token& t) {
    const std::string& name = t.text;
    if (concept_names_.count(name)) return Description{ast::NamedRef{name}};
    if (kb_.lattice.contains(name)) return Description{ast::HostConcept{name}};
    if (kb_.roles.count(name)) fail_at("role '" + name + "' used as a concept", t.pos);
    if (kb_.attributes.count(name)) fail_at("attribute '" + name + "' used as a concept", t.pos);
    if (kb_.individuals.count(name)) fail_at("individual '" + name + "' used as a concept", t.pos);
    return Description{ast::ConceptName{name}};
  }

  Description and_form() {
    expect(Tok::LParen, "'('");
    std::vector<Description> parts;
    parts.push_back(desc());
    while (tok_.kind == Tok::Comma) {
      advance();
      parts.push_back(desc());
    }
    if (parts.size() < 2) fail({"','"});
    expect(Tok::RParen, "')'");
    return Description{ast::And{std::move(parts)}};
  }

  PropertyKind property_kind(const Token& t) {
    if (kb_.roles.count(t.text)) return PropertyKind::Role;
    if (kb_.attributes.count(t.text)) return PropertyKind::Attribute;
    if (kKeywords.count(t.text) || builtin_of(t.text)) fail_at("keyword '" + t.text + "' used as a property", t.pos);
    if (kb_.individuals.count(t.text) || concept_names_.count(t.text) || kb_.lattice.contains(t.text))
      fail_at("'" + t.text + "' is not a role or attribute", t.pos);
    return PropertyKind::Unresolved;
  }

  Description all_form() {
    expect(Tok::LParen, "'('");
    Token p = take_ident("role or attribute name");
    PropertyKind kind = property_kind(p);
    expect(Tok::Comma, "','");
    Description inner = desc();
    expect(Tok::RParen, "')'");
    return Description{ast::All{kind, p.text, std::move(inner)}};
  }

  Description count_form(bool at_least, std::size_t) {
    expect(Tok::LParen, "'('");
    if (tok_.kind != Tok::Int) fail({"integer"});
    Token n = tok_;
    if (n.text.front() == '-') fail_at("number restriction must be non-negative", n.pos);
    std::uint64_t count = 0;
    try {
      count = std::stoull(n.text);
    } catch (const std::exception&) {
      fail_at("number restriction out of range", n.pos);
    }
    if (at_least && count == 0) fail_at("at-least needs a positive integer", n.pos);
    advance();
    expect(Tok::Comma, "','");
    Token r = take_ident("role name");
    if (kb_.attributes.count(r.text)) fail_at("attribute '" + r.text + "' used in a number restriction", r.pos);
    if (property_kind(r) == PropertyKind::Unresolved) {
      if (uses_.chained.count(r.text))
        fail_at("'" + r.text + "' is used both as a role and in a same-as chain", r.pos);
      uses_.counted.emplace(r.text, r.pos);
    }
    expect(Tok::RParen, "')'");
    if (at_least) return Description{ast::AtLeast{count, r.text}};
    return Description{ast::AtMost{count, r.text}};
  }

  std::vector<std::string> chain() {
    expect(Tok::LParen, "'('");
    std::vector<std::string> out;
    for (;;) {
      Token a = take_ident("attribute name");
      if (kb_.roles.count(a.text)) fail_at("role '" + a.text + "' used in a same-as chain", a.pos);
      if (property_kind(a) == PropertyKind::Unresolved) {
        if (uses_.counted.count(a.text))
          fail_at("'" + a.text + "' is used both as a role and in a same-as chain", a.pos);
        uses_.chained.emplace(a.text, a.pos);
      }
      out.push_back(a.text);
      if (tok_.kind != Tok::Comma) break;
      advance();
    }
    expect(Tok::RParen, "')'");
    return out;
  }

  Description same_as_form() {
    expect(Tok::LParen, "'('");
    auto left = chain();
    expect(Tok::Comma, "','");
    auto right = chain();
    expect(Tok::RParen, "')'");
    return Description{ast::SameAs{std::move(left), std::move(right)}};
  }

  Individual individual() {
    Token t = tok_;
    switch (t.kind) {
      case Tok::Int: advance(); return Individual::integer(t.text);
      case Tok::Decimal: advance(); return Individual::decimal(t.text);
      case Tok::String: advance(); return Individual::string(t.text);
      case Tok::Ident:
        if (kKeywords.count(t.text) || builtin_of(t.text)) fail_at("keyword '" + t.text + "' used as an individual", t.pos);
        if (is_declared_property(t.text) || concept_names_.count(t.text) || kb_.lattice.contains(t.text))
          fail_at("'" + t.text + "' is not an individual", t.pos);
        advance();
        return Individual::named(t.text);
      default: fail({"individual"});
    }
  }

  Description fills_form() {
    expect(Tok::LParen, "'('");
    Token p = take_ident("role or attribute name");
    PropertyKind kind = property_kind(p);
    expect(Tok::Comma, "','");
    Individual l = individual();
    expect(Tok::RParen, "')'");
    return Description{ast::Fills{kind, p.text, std::move(l)}};
  }

  Description one_of_form(std::size_t pos) {
    expect(Tok::LParen, "'('");
    std::vector<Individual> members;
    for (;;) {
      members.push_back(individual());
      if (tok_.kind != Tok::Comma) break;
      advance();
    }
    expect(Tok::RParen, "')'");
    bool host = members.front().is_host();
    for (const auto& m : members)
      if (m.is_host() != host) fail_at("one-of mixes host values and classic individuals", pos);
    return Description{ast::OneOf{std::move(members)}};
  }

  Description primitive_form() {
    expect(Tok::LParen, "'('");
    Description body = desc();
    expect(Tok::Comma, "','");
    Token tag = take_ident("primitive tag");
    expect(Tok::RParen, "')'");
    return Description{ast::Primitive{std::move(body), tag.text}};
  }

  Description test_form() {
    expect(Tok::LParen, "'('");
    Token fn = take_ident("function name");
    expect(Tok::Comma, "','");
    if (tok_.kind != Tok::Ident || (tok_.text != "classic" && tok_.text != "host")) fail({"'classic'", "'host'"});
    Realm realm = tok_.text == "host" ? Realm::Host : Realm::Classic;
    advance();
    expect(Tok::RParen, "')'");
    return Description{ast::Test{fn.text, realm}};
  }

  Lexer lexer_;
  Token tok_;
  const KnowledgeBase& kb_;
  const std::set<std::string>& concept_names_;
  PropertyUses& uses_;
};

Description resolve(const Description& d, const std::set<std::string>& attributes) {
  auto kind_of = [&](PropertyKind k, const std::string& name) {
    if (k != PropertyKind::Unresolved) return k;
    return attributes.count(name) ? PropertyKind::Attribute : PropertyKind::Role;
  };
  if (auto a = d.as<ast::And>()) {
    std::vector<Description> parts;
    for (const auto& c : a->conjuncts) parts.push_back(resolve(c, attributes));
    return Description{ast::And{std::move(parts)}};
  }
  if (auto a = d.as<ast::All>())
    return Description{ast::All{kind_of(a->kind, a->property), a->property, resolve(*a->restriction, attributes)}};
  if (auto f = d.as<ast::Fills>()) return Description{ast::Fills{kind_of(f->kind, f->property), f->property, f->filler}};
  if (auto p = d.as<ast::Primitive>()) return Description{ast::Primitive{resolve(*p->body, attributes), p->tag}};
  return d;
}

std::set<std::string> concept_name_set(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const auto& [name, body] : kb.named) out.insert(name);
  return out;
}

// Parses texts jointly. `on_error` lets the KB loader rethrow with line info.
std::vector<Description> parse_joint(const std::vector<std::string_view>& texts, const KnowledgeBase& kb,
                                     const std::set<std::string>& concept_names,
                                     std::set<std::string>* new_roles, std::set<std::string>* new_attributes,
                                     const std::function<void(std::size_t, const ParseError&)>& on_error) {
  PropertyUses uses;
  std::vector<Description> raw;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      raw.push_back(Parser(texts[i], kb, concept_names, uses).parse_all());
    } catch (const ParseError& e) {
      on_error(i, e);
      throw;
    }
  }
  std::set<std::string> attributes;
  for (const auto& [name, pos] : uses.chained) attributes.insert(name);
  std::vector<Description> out;
  out.reserve(raw.size());
  for (const auto& d : raw) out.push_back(resolve(d, attributes));
  if (new_attributes) *new_attributes = attributes;
  if (new_roles) {
    std::function<void(const Description&)> collect = [&](const Description& d) {
      if (auto a = d.as<ast::And>())
        for (const auto& c : a->conjuncts) collect(c);
      if (auto a = d.as<ast::All>()) {
        if (a->kind == PropertyKind::Role && !kb.roles.count(a->property)) new_roles->insert(a->property);
        collect(*a->restriction);
      }
      if (auto f = d.as<ast::Fills>())
        if (f->kind == PropertyKind::Role && !kb.roles.count(f->property)) new_roles->insert(f->property);
      if (auto n = d.as<ast::AtLeast>())
        if (!kb.roles.count(n->role)) new_roles->insert(n->role);
      if (auto n = d.as<ast::AtMost>())
        if (!kb.roles.count(n->role)) new_roles->insert(n->role);
      if (auto p = d.as<ast::Primitive>()) collect(*p->body);
    };
    for (const auto& d : out) collect(d);
  }
  return out;
}

}  // namespace

std::vector<Description> parse_descriptions(const std::vector<std::string>& texts, const KnowledgeBase& kb) {
  std::vector<std::string_view> views(texts.begin(), texts.end());
  return parse_joint(views, kb, concept_name_set(kb), nullptr, nullptr, [](std::size_t, const ParseError&) {});
}

Description parse_description(std::string_view text, const KnowledgeBase& kb) {
  return parse_descriptions({std::string(text)}, kb).front();
}

namespace {

struct KbLine {
  std::size_t number;
  std::string_view text;  // comment stripped
  std::size_t offset;     // of `text` within the line
};

std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
    } else if (c == '"') {
      in_string = true;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

std::vector<std::pair<std::string, std::size_t>> words(std::string_view s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(std::string(s.substr(start, i - start)), start);
  }
  return out;
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), ident_char);
}

void find_cycles(const KnowledgeBase& kb, const std::map<std::string, std::size_t>& lines) {
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::function<void(const std::string&, std::vector<std::string>&)> visit =
      [&](const std::string& name, std::vector<std::string>& path) {
        int& s = state[name];
        if (s == 2) return;
        if (s == 1) {
          std::string cycle;
          auto it = std::find(path.begin(), path.end(), name);
          for (; it != path.end(); ++it) cycle += *it + " -> ";
          throw ParseError("recursive concept definition: " + cycle + name, 0, {}, lines.at(name));
        }
        s = 1;
        path.push_back(name);
        std::function<void(const Description&)> walk = [&](const Description& d) {
          if (auto r = d.as<ast::NamedRef>()) visit(r->name, path);
          if (auto a = d.as<ast::And>())
            for (const auto& c : a->conjuncts) walk(c);
          if (auto a = d.as<ast::All>()) walk(*a->restriction);
          if (auto p = d.as<ast::Primitive>()) walk(*p->body);
        };
        walk(*kb.find_named(name));
        path.pop_back();
        state[name] = 2;
      };
  for (const auto& [name, body] : kb.named) {
    std::vector<std::string> path;
    visit(name, path);
  }
}

// The atom a disjointness declaration refers to: a primitive named concept
// contributes its minted atom, anything else must be an atomic name.
std::string disjoint_atom(const KnowledgeBase& kb, const std::string& name, std::size_t line, std::size_t col) {
  const Description* body = kb.find_named(name);
  if (!body) {
    if (kb.roles.count(name) || kb.attributes.count(name) || kb.individuals.count(name) ||
        kb.lattice.contains(name) || builtin_of(name))
      throw ParseError("'" + name + "' cannot be declared disjoint", col, {}, line);
    return name;
  }
  while (auto r = body->as<ast::NamedRef>()) body = kb.find_named(r->name);
  if (auto p = body->as<ast::Primitive>()) {
    Expander ex(kb);
    Description inner = ex.expand(*p->body);
    return primitive_atom(p->tag, realm_of(inner).value_or(Realm::Classic));
  }
  if (auto c = body->as<ast::ConceptName>()) return c->name;
  throw ParseError("disjoint concept '" + name + "' is neither atomic nor primitive", col, {}, line);
}

}  // namespace

KnowledgeBase parse_kb(std::string_view text) {
  KnowledgeBase kb;
  std::vector<KbLine> lines;
  {
    std::size_t number = 1, start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines.push_back({number++, strip_comment(text.substr(start, end - start)), 0});
      start = end + 1;
    }
  }

  std::map<std::string, std::size_t> declared;  // name -> line
  auto declare = [&](const std::string& name, std::size_t line, std::size_t col) {
    if (!valid_identifier(name) || kKeywords.count(name) || builtin_of(name))
      throw ParseError("invalid name '" + name + "'", col, {"identifier"}, line);
    auto [it, inserted] = declared.emplace(name, line);
    if (!inserted)
      throw ParseError("'" + name + "' redeclared (first declared on line " + std::to_string(it->second) + ")", col,
                       {}, line);
  };

  struct PendingConcept {
    std::string name;
    std::string_view body;
    std::size_t line;
    std::size_t body_col;
  };
  std::vector<PendingConcept> concepts;
  std::vector<std::pair<std::size_t, std::vector<std::pair<std::string, std::size_t>>>> disjoints;
  std::map<std::string, std::size_t> concept_lines;

  for (const auto& l : lines) {
    auto w = words(l.text);
    if (w.empty()) continue;
    const std::string& head = w[0].first;
    auto need = [&](std::size_t n, const char* what) {
      if (w.size() < n) throw ParseError("expected " + std::string(what), l.text.size(), {what}, l.number);
    };
    if (head == "role" || head == "attribute" || head == "individual") {
      need(2, "name");
      if (w.size() > 2) throw ParseError("unexpected '" + w[2].first + "'", w[2].second, {"end of line"}, l.number);
      declare(w[1].first, l.number, w[1].second);
      (head == "role" ? kb.roles : head == "attribute" ? kb.attributes : kb.individuals).insert(w[1].first);
    } else if (head == "host-type") {
      need(2, "host type name");
      std::optional<std::string> parent;
      if (w.size() > 2) {
        if (w[2].first != "subtype-of")
          throw ParseError("unexpected '" + w[2].first + "'", w[2].second, {"'subtype-of'"}, l.number);
        need(4, "parent host type");
        if (w.size() > 4)
          throw ParseError("host type '" + w[1].first +
                               "' has several parents; overlapping host types must be nested",
                           w[4].second, {"end of line"}, l.number);
        parent = w[3].first;
      }
      declare(w[1].first, l.number, w[1].second);
      try {
        kb.lattice.declare(w[1].first, parent);
      } catch (const LatticeError& e) {
        throw ParseError(e.what(), w[1].second, {}, l.number);
      }
    } else if (head == "concept") {
      need(3, "':='");
      auto assign = l.text.find(":=");
      if (w[2].first.rfind(":=", 0) != 0 || assign == std::string_view::npos)
        throw ParseError("expected ':='", w[2].second, {"':='"}, l.number);
      declare(w[1].first, l.number, w[1].second);
      concepts.push_back({w[1].first, l.text.substr(assign + 2), l.number, assign + 2});
      concept_lines[w[1].first] = l.number;
    } else if (head == "disjoint") {
      need(3, "at least two concept names");
      disjoints.emplace_back(l.number, std::vector(w.begin() + 1, w.end()));
    } else {
      throw ParseError("unknown declaration '" + head + "'", w[0].second,
                       {"'role'", "'attribute'", "'individual'", "'host-type'", "'concept'", "'disjoint'"},
                       l.number);
    }
  }
  for (const auto& [name, line] : declared)
    if (kb.lattice.contains(name) && concept_lines.count(name))
      throw ParseError("'" + name + "' is both a host type and a concept", 0, {}, line);

  std::set<std::string> names;
  for (const auto& c : concepts) names.insert(c.name);
  std::vector<std::string_view> bodies;
  for (const auto& c : concepts) bodies.push_back(c.body);
  std::set<std::string> new_roles, new_attributes;
  auto parsed = parse_joint(bodies, kb, names, &new_roles, &new_attributes, [&](std::size_t i, const ParseError& e) {
    throw ParseError(e.what(), concepts[i].body_col + e.position(), e.expected(), concepts[i].line);
  });
  kb.roles.insert(new_roles.begin(), new_roles.end());
  kb.attributes.insert(new_attributes.begin(), new_attributes.end());
  for (std::size_t i = 0; i < concepts.size(); ++i) kb.named.emplace_back(concepts[i].name, std::move(parsed[i]));
  find_cycles(kb, concept_lines);

  for (const auto& [line, members] : disjoints) {
    std::set<std::string> group;
    for (const auto& [name, col] : members) group.insert(disjoint_atom(kb, name, line, col));
    if (group.size() >= 2) kb.disjoint_groups.push_back(std::move(group));
  }
  return kb;
}

namespace {

void print_to(std::ostringstream& os, const Description& d);

void print_chain(std::ostringstream& os, const std::vector<std::string>& chain) {
  os << '(';
  for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? ", " : "") << chain[i];
  os << ')';
}

void print_to(std::ostringstream& os, const Description& d) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Builtin>) {
          static const char* names[] = {"thing", "classic-thing", "host-thing", "nothing"};
          os << names[static_cast<int>(n.which)];
        } else if constexpr (std::is_same_v<T, ast::ConceptName> || std::is_same_v<T, ast::HostConcept> ||
                             std::is_same_v<T, ast::NamedRef>) {
          os << n.name;
        } else if constexpr (std::is_same_v<T, ast::And>) {
          os << "and(";
          for (std::size_t i = 0; i < n.conjuncts.size(); ++i) {
            if (i) os << ", ";
            print_to(os, n.conjuncts[i]);
          }
          os << ')';
        } else if constexpr (std::is_same_v<T, ast::All>) {
          os << "all(" << n.property << ", ";
          print_to(os, *n.restriction);
          os << ')';
        } else if constexpr (std::is_same_v<T, ast::AtLeast>) {
          os << "at-least(" << n.count << ", " << n.role << ')';
        } else if constexpr (std::is_same_v<T, ast::AtMost>) {
          os << "at-most(" << n.count << ", " << n.role << ')';
        } else if constexpr (std::is_same_v<T, ast::SameAs>) {
          os << "same-as(";
          print_chain(os, n.left);
          os << ", ";
          print_chain(os, n.right);
          os << ')';
        } else if constexpr (std::is_same_v<T, ast::Fills>) {
          os << "fills(" << n.property << ", " << to_text(n.filler) << ')';
        } else if constexpr (std::is_same_v<T, ast::OneOf>) {
          os << "one-of(";
          for (std::size_t i = 0; i < n.members.size(); ++i) os << (i ? ", " : "") << to_text(n.members[i]);
          os << ')';
        } else if constexpr (std::is_same_v<T, ast::Primitive>) {
          os << "primitive(";
          print_to(os, *n.body);
          os << ", " << n.tag << ')';
        } else if constexpr (std::is_same_v<T, ast::Test>) {
          os << "test(" << n.function << ", " << (n.realm == Realm::Host ? "host" : "classic") << ')';
        }
      },
      d.node);
}

const char* kind_name(PropertyKind k) {
  switch (k) {
    case PropertyKind::Role: return "role";
    case PropertyKind::Attribute: return "attribute";
    case PropertyKind::Unresolved: return "unresolved";
  }
  return "unresolved";
}

}  // namespace

std::string print(const Description& d) {
  std::ostringstream os;
  print_to(os, d);
  return os.str();
}

nlohmann::ordered_json to_json(const Description& d) {
  using J = nlohmann::ordered_json;
  return std::visit(
      [&](const auto& n) -> J {
        using T = std::decay_t<decltype(n)>;
        J j;
        if constexpr (std::is_same_v<T, ast::Builtin>) {
          static const char* names[] = {"thing", "classic-thing", "host-thing", "nothing"};
          j["type"] = names[static_cast<int>(n.which)];
        } else if constexpr (std::is_same_v<T, ast::ConceptName>) {
          j["type"] = "concept";
          j["name"] = n.name;
        } else if constexpr (std::is_same_v<T, ast::HostConcept>) {
          j["type"] = "host-concept";
          j["name"] = n.name;
        } else if constexpr (std::is_same_v<T, ast::NamedRef>) {
          j["type"] = "named";
          j["name"] = n.name;
        } else if constexpr (std::is_same_v<T, ast::And>) {
          j["type"] = "and";
          j["conjuncts"] = J::array();
          for (const auto& c : n.conjuncts) j["conjuncts"].push_back(to_json(c));
        } else if constexpr (std::is_same_v<T, ast::All>) {
          j["type"] = "all";
          j["kind"] = kind_name(n.kind);
          j["property"] = n.property;
          j["restriction"] = to_json(*n.restriction);
        } else if constexpr (std::is_same_v<T, ast::AtLeast>) {
          j["type"] = "at-least";
          j["count"] = n.count;
          j["role"] = n.role;
        } else if constexpr (std::is_same_v<T, ast::AtMost>) {
          j["type"] = "at-most";
          j["count"] = n.count;
          j["role"] = n.role;
        } else if constexpr (std::is_same_v<T, ast::SameAs>) {
          j["type"] = "same-as";
          j["left"] = n.left;
          j["right"] = n.right;
        } else if constexpr (std::is_same_v<T, ast::Fills>) {
          j["type"] = "fills";
          j["kind"] = kind_name(n.kind);
          j["property"] = n.property;
          j["filler"] = to_text(n.filler);
        } else if constexpr (std::is_same_v<T, ast::OneOf>) {
          j["type"] = "one-of";
          j["members"] = J::array();
          for (const auto& m : n.members) j["members"].push_back(to_text(m));
        } else if constexpr (std::is_same_v<T, ast::Primitive>) {
          j["type"] = "primitive";
          j["tag"] = n.tag;
          j["body"] = to_json(*n.body);
        } else if constexpr (std::is_same_v<T, ast::Test>) {
          j["type"] = "test";
          j["function"] = n.function;
          j["realm"] = n.realm == Realm::Host ? "host" : "classic";
        }
        return j;
      },
      d.node);
}

}  // namespace classic
