#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wheeler/automaton.hpp"

namespace wheeler {

/// Regular expression syntax tree. Concat and Union hold two or more children;
/// Star, Plus and Optional hold exactly one.
struct RegexAst {
  enum class Kind { Literal, Concat, Union, Star, Plus, Optional, Epsilon };

  Kind kind = Kind::Epsilon;
  char symbol = 0;  // Literal only
  std::vector<RegexAst> children;

  static RegexAst literal(char c) { return {Kind::Literal, c, {}}; }
  static RegexAst epsilon() { return {Kind::Epsilon, 0, {}}; }
  static RegexAst unary(Kind kind, RegexAst child);
  static RegexAst nary(Kind kind, std::vector<RegexAst> children);

  bool operator==(const RegexAst&) const = default;
};

/// Grammar, loosest binding first:
///   union  := concat ('|' concat)*      an empty branch denotes epsilon
///   concat := postfix*
///   postfix:= atom ('*' | '+' | '?')*
///   atom   := alphanumeric | '\' printable | '(' union ')'
/// Throws ParseError on unbalanced parentheses, dangling operators or an empty
/// pattern.
RegexAst parse_regex(std::string_view pattern);

/// Canonical textual form, fully parenthesized where needed.
std::string to_string(const RegexAst& ast);

/// Distinct literal characters of the tree, ascending by character code.
std::string literals(const RegexAst& ast);

/// Membership by direct recursion on the tree; exponential, test use only.
bool regex_matches(const RegexAst& ast, std::string_view word);

struct CompileOptions {
  std::size_t max_states = 1'000'000;
  // Overrides the default alphabet; must contain every literal.
  std::optional<Alphabet> alphabet;
};

/// Thompson NFA, subset construction, then trimming and minimization.
/// Throws ResourceError when the subset construction exceeds max_states.
Automaton compile_regex(const RegexAst& ast, const CompileOptions& options = {});

}  // namespace wheeler
