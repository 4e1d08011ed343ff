#include "wheeler/regex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "wheeler/minimize.hpp"

namespace wheeler {

RegexAst RegexAst::unary(Kind kind, RegexAst child) {
  RegexAst node{kind, 0, {}};
  node.children.push_back(std::move(child));
  return node;
}

RegexAst RegexAst::nary(Kind kind, std::vector<RegexAst> children) {
  if (children.empty()) return epsilon();
  if (children.size() == 1) return std::move(children.front());
  RegexAst node{kind, 0, {}};
  for (auto& child : children) {
    if (child.kind == kind) {
      for (auto& grandchild : child.children) node.children.push_back(std::move(grandchild));
    } else {
      node.children.push_back(std::move(child));
    }
  }
  return node;
}

namespace {

class RegexParser {
 public:
  explicit RegexParser(std::string_view pattern) : p_(pattern) {}

  RegexAst parse() {
    if (p_.empty()) throw ParseError("empty pattern");
    RegexAst ast = parse_union();
    if (i_ < p_.size()) {
      // parse_union only stops early at an unmatched ')'
      fail("unbalanced parentheses: unexpected ')'");
    }
    return ast;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("regex position " + std::to_string(i_) + ": " + what);
  }

  RegexAst parse_union() {
    std::vector<RegexAst> branches{parse_concat()};
    while (i_ < p_.size() && p_[i_] == '|') {
      ++i_;
      branches.push_back(parse_concat());
    }
    return RegexAst::nary(RegexAst::Kind::Union, std::move(branches));
  }

  RegexAst parse_concat() {
    std::vector<RegexAst> items;
    while (i_ < p_.size() && p_[i_] != '|' && p_[i_] != ')') {
      items.push_back(parse_postfix());
    }
    return RegexAst::nary(RegexAst::Kind::Concat, std::move(items));
  }

  RegexAst parse_postfix() {
    RegexAst node = parse_atom();
    while (i_ < p_.size()) {
      RegexAst::Kind kind;
      switch (p_[i_]) {
        case '*': kind = RegexAst::Kind::Star; break;
        case '+': kind = RegexAst::Kind::Plus; break;
        case '?': kind = RegexAst::Kind::Optional; break;
        default: return node;
      }
      ++i_;
      node = RegexAst::unary(kind, std::move(node));
    }
    return node;
  }

  RegexAst parse_atom() {
    const char c = p_[i_];
    if (c == '(') {
      ++i_;
      RegexAst inner = parse_union();
      if (i_ >= p_.size() || p_[i_] != ')') fail("unbalanced parentheses: missing ')'");
      ++i_;
      return inner;
    }
    if (c == '*' || c == '+' || c == '?') fail(std::string("dangling operator '") + c + "'");
    if (c == '\\') {
      if (i_ + 1 >= p_.size()) fail("dangling escape at end of pattern");
      const char e = p_[i_ + 1];
      if (!std::isgraph(static_cast<unsigned char>(e))) fail("escaped character must be printable");
      i_ += 2;
      return RegexAst::literal(e);
    }
    if (std::isalnum(static_cast<unsigned char>(c))) {
      ++i_;
      return RegexAst::literal(c);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view p_;
  std::size_t i_ = 0;
};

bool needs_escape(char c) { return !std::isalnum(static_cast<unsigned char>(c)); }

void collect_literals(const RegexAst& ast, std::set<char>& out) {
  if (ast.kind == RegexAst::Kind::Literal) out.insert(ast.symbol);
  for (const auto& child : ast.children) collect_literals(child, out);
}

// End positions j such that `ast` matches word[start, j).
std::set<std::size_t> match_ends(const RegexAst& ast, std::string_view word, std::size_t start) {
  using Kind = RegexAst::Kind;
  switch (ast.kind) {
    case Kind::Epsilon: return {start};
    case Kind::Literal:
      if (start < word.size() && word[start] == ast.symbol) return {start + 1};
      return {};
    case Kind::Concat: {
      std::set<std::size_t> current{start};
      for (const auto& child : ast.children) {
        std::set<std::size_t> next;
        for (auto s : current) {
          auto ends = match_ends(child, word, s);
          next.insert(ends.begin(), ends.end());
        }
        current = std::move(next);
      }
      return current;
    }
    case Kind::Union: {
      std::set<std::size_t> all;
      for (const auto& child : ast.children) {
        auto ends = match_ends(child, word, start);
        all.insert(ends.begin(), ends.end());
      }
      return all;
    }
    case Kind::Optional: {
      auto ends = match_ends(ast.children[0], word, start);
      ends.insert(start);
      return ends;
    }
    case Kind::Star:
    case Kind::Plus: {
      std::set<std::size_t> reached;
      std::vector<std::size_t> frontier{start};
      std::set<std::size_t> expanded;
      while (!frontier.empty()) {
        auto s = frontier.back();
        frontier.pop_back();
        if (!expanded.insert(s).second) continue;
        for (auto e : match_ends(ast.children[0], word, s)) {
          if (reached.insert(e).second) frontier.push_back(e);
        }
      }
      if (ast.kind == Kind::Star) reached.insert(start);
      return reached;
    }
  }
  return {};
}

// Thompson construction; symbol -1 marks an epsilon edge.
struct Thompson {
  std::vector<std::vector<std::pair<int, int>>> edges;

  int add_state() {
    edges.emplace_back();
    return static_cast<int>(edges.size()) - 1;
  }
  void add(int from, int symbol, int to) { edges[from].push_back({symbol, to}); }

  std::pair<int, int> build(const RegexAst& ast, const Alphabet& alphabet) {
    using Kind = RegexAst::Kind;
    int s = add_state();
    int t = add_state();
    switch (ast.kind) {
      case Kind::Epsilon: add(s, -1, t); break;
      case Kind::Literal: add(s, *alphabet.index_of(ast.symbol), t); break;
      case Kind::Concat: {
        int cur = s;
        for (const auto& child : ast.children) {
          auto [cs, ct] = build(child, alphabet);
          add(cur, -1, cs);
          cur = ct;
        }
        add(cur, -1, t);
        break;
      }
      case Kind::Union:
        for (const auto& child : ast.children) {
          auto [cs, ct] = build(child, alphabet);
          add(s, -1, cs);
          add(ct, -1, t);
        }
        break;
      case Kind::Star:
      case Kind::Plus:
      case Kind::Optional: {
        auto [cs, ct] = build(ast.children[0], alphabet);
        add(s, -1, cs);
        add(ct, -1, t);
        if (ast.kind != Kind::Plus) add(s, -1, t);
        if (ast.kind != Kind::Optional) add(ct, -1, cs);
        break;
      }
    }
    return {s, t};
  }

  void close(std::vector<int>& set) const {
    std::vector<int> stack(set.begin(), set.end());
    std::vector<char> in(edges.size(), 0);
    for (int x : set) in[x] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [sym, to] : edges[x]) {
        if (sym < 0 && !in[to]) {
          in[to] = 1;
          set.push_back(to);
          stack.push_back(to);
        }
      }
    }
    std::sort(set.begin(), set.end());
  }
};

}  // namespace

RegexAst parse_regex(std::string_view pattern) { return RegexParser(pattern).parse(); }

std::string to_string(const RegexAst& ast) {
  using Kind = RegexAst::Kind;
  auto wrap = [](const RegexAst& child, bool need) {
    std::string s = to_string(child);
    return need ? "(" + s + ")" : s;
  };
  switch (ast.kind) {
    case Kind::Epsilon: return "()";
    case Kind::Literal:
      return needs_escape(ast.symbol) ? std::string{'\\', ast.symbol} : std::string(1, ast.symbol);
    case Kind::Concat: {
      std::string s;
      for (const auto& c : ast.children) s += wrap(c, c.kind == Kind::Union);
      return s;
    }
    case Kind::Union: {
      std::string s;
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i) s += '|';
        if (ast.children[i].kind != Kind::Epsilon) s += to_string(ast.children[i]);
      }
      return s;
    }
    case Kind::Star:
    case Kind::Plus:
    case Kind::Optional: {
      const auto& c = ast.children[0];
      bool atomic = c.kind == Kind::Literal || c.kind == Kind::Epsilon;
      char op = ast.kind == Kind::Star ? '*' : ast.kind == Kind::Plus ? '+' : '?';
      return wrap(c, !atomic) + op;
    }
  }
  return {};
}

std::string literals(const RegexAst& ast) {
  std::set<char> set;
  collect_literals(ast, set);
  return {set.begin(), set.end()};
}

bool regex_matches(const RegexAst& ast, std::string_view word) {
  return match_ends(ast, word, 0).count(word.size()) > 0;
}

Automaton compile_regex(const RegexAst& ast, const CompileOptions& options) {
  Alphabet alphabet = options.alphabet ? *options.alphabet : Alphabet(literals(ast));
  for (char c : literals(ast)) {
    if (!alphabet.index_of(c)) {
      throw Error(std::string("alphabet override lacks literal '") + c + "'");
    }
  }

  Thompson nfa;
  auto [start, accept] = nfa.build(ast, alphabet);

  std::map<std::vector<int>, StateId> ids;
  std::vector<std::vector<int>> subsets;
  std::vector<Transition> transitions;
  std::vector<StateId> finals;
  auto intern = [&](std::vector<int> set) -> StateId {
    auto [it, fresh] = ids.emplace(std::move(set), static_cast<StateId>(subsets.size()));
    if (fresh) {
      if (subsets.size() >= options.max_states) {
        throw ResourceError("regex: subset construction exceeds " +
                            std::to_string(options.max_states) + " states");
      }
      subsets.push_back(it->first);
    }
    return it->second;
  };

  std::vector<int> initial{start};
  nfa.close(initial);
  intern(std::move(initial));
  for (std::size_t id = 0; id < subsets.size(); ++id) {
    const std::vector<int> current = subsets[id];
    if (std::binary_search(current.begin(), current.end(), accept)) {
      finals.push_back(static_cast<StateId>(id));
    }
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      std::vector<int> moved;
      for (int x : current) {
        for (auto [sym, to] : nfa.edges[x]) {
          if (sym == static_cast<int>(c)) moved.push_back(to);
        }
      }
      if (moved.empty()) continue;
      std::sort(moved.begin(), moved.end());
      moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
      nfa.close(moved);
      StateId to = intern(std::move(moved));
      transitions.push_back({static_cast<StateId>(id), static_cast<Symbol>(c), to});
    }
  }

  Automaton dfa(alphabet, static_cast<StateId>(subsets.size()), 0, std::move(finals),
                std::move(transitions));
  return minimize(trim(dfa).automaton).automaton;
}

}  // namespace wheeler
