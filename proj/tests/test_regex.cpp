#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wheeler/minimize.hpp"
#include "wheeler/regex.hpp"

using namespace wheeler;

namespace {

std::string random_pattern(std::mt19937_64& rng, int depth) {
  const char* letters = "abc";
  if (depth == 0 || rng() % 4 == 0) return std::string(1, letters[rng() % 3]);
  switch (rng() % 6) {
    case 0: return random_pattern(rng, depth - 1) + random_pattern(rng, depth - 1);
    case 1: return "(" + random_pattern(rng, depth - 1) + "|" + random_pattern(rng, depth - 1) + ")";
    case 2: return "(" + random_pattern(rng, depth - 1) + ")*";
    case 3: return "(" + random_pattern(rng, depth - 1) + ")+";
    case 4: return "(" + random_pattern(rng, depth - 1) + ")?";
    default: return "(|" + random_pattern(rng, depth - 1) + ")";
  }
}

}  // namespace

TEST_CASE("parse precedence") {
  using K = RegexAst::Kind;
  auto ast = parse_regex("ab*|c");
  REQUIRE(ast.kind == K::Union);
  REQUIRE(ast.children.size() == 2);
  CHECK(ast.children[0].kind == K::Concat);
  CHECK(ast.children[0].children[1].kind == K::Star);
  CHECK(ast.children[1] == RegexAst::literal('c'));
  CHECK(parse_regex("a|") .children[1].kind == K::Epsilon);
  CHECK(parse_regex("()").kind == K::Epsilon);
  CHECK(parse_regex("a**").kind == K::Star);
  CHECK(parse_regex("\\.").symbol == '.');
}

TEST_CASE("parse errors") {
  for (const char* bad : {"", "(", ")", "a)", "(a", "*", "a|*", "(*a)", "a\\", "a.b", "a b"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_regex(bad), ParseError);
  }
}

TEST_CASE("to_string reparses to the same tree") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto ast = parse_regex(random_pattern(rng, 4));
    CHECK(parse_regex(to_string(ast)) == ast);
  }
  CHECK(to_string(parse_regex("(a|b)*c")) == "(a|b)*c");
}

TEST_CASE("literals are sorted by character code") {
  CHECK(literals(parse_regex("(ca|b)*a")) == "abc");
  CHECK(literals(parse_regex("()")).empty());
}

TEST_CASE("known minimum sizes") {
  CHECK(compile_regex(parse_regex("a*")).num_states() == 1);
  CHECK(compile_regex(parse_regex("(aa)*")).num_states() == 2);
  CHECK(compile_regex(parse_regex("ab*")).num_states() == 2);
  CHECK(compile_regex(parse_regex("(a|b)*")).num_states() == 1);
  auto eps = compile_regex(parse_regex("()"));
  CHECK(eps.num_states() == 1);
  CHECK(eps.num_transitions() == 0);
}

TEST_CASE("compiled automaton agrees with direct matching") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto pattern = random_pattern(rng, 4);
    CAPTURE(pattern);
    auto ast = parse_regex(pattern);
    CompileOptions opts;
    opts.alphabet = Alphabet("abc");
    Automaton a = compile_regex(ast, opts);
    CHECK(a.deterministic());
    CHECK(a.num_states() == testing::nerode_classes(a));
    for (const auto& w : testing::all_words(3, 5)) {
      CHECK(regex_matches(ast, decode(a.alphabet(), w)) == (!a.empty() && a.accepts(w)));
    }
  }
}

TEST_CASE("alphabet override must cover the literals") {
  CompileOptions opts;
  opts.alphabet = Alphabet("a");
  CHECK_THROWS_AS(compile_regex(parse_regex("ab"), opts), Error);
}

TEST_CASE("state cap") {
  CompileOptions opts;
  opts.max_states = 8;
  // the k-th letter from the end is a: 2^k subset states
  CHECK_THROWS_AS(compile_regex(parse_regex("(a|b)*a(a|b)(a|b)(a|b)(a|b)"), opts), ResourceError);
}
