#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "classic/ast.hpp"
#include "classic/kb.hpp"

namespace classic {

/// Syntax or resolution error. `position` is a byte offset into the text
/// that failed; for KB files `line` is 1-based, otherwise 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position, std::vector<std::string> expected = {},
             std::size_t line = 0);

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::size_t line_;
  std::vector<std::string> expected_;
};

/// Parses several descriptions against one KB. Undeclared property names are
/// resolved jointly: a name counted by at-least/at-most is a role, a name in
/// a same-as chain is an attribute, and anything else defaults to a role.
std::vector<Description> parse_descriptions(const std::vector<std::string>& texts,
                                            const KnowledgeBase& kb = {});
Description parse_description(std::string_view text, const KnowledgeBase& kb = {});

KnowledgeBase parse_kb(std::string_view text);

/// Source text in the grammar accepted by parse_description.
std::string print(const Description& d);

nlohmann::ordered_json to_json(const Description& d);

}  // namespace classic
