#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wheeler/minimize.hpp"
#include "wheeler/recognizer.hpp"
#include "wheeler/regex.hpp"

using namespace wheeler;

namespace {
Report check_regex(const char* pattern) {
  return recognize(compile_regex(parse_regex(pattern)), InputMode::Regex);
}
}  // namespace

TEST_CASE("known languages") {
  auto aa = check_regex("(aa)*");
  CHECK_FALSE(aa.wheeler);
  REQUIRE(aa.witness);
  CHECK(aa.witness->labels == std::vector<Symbol>{0, 0});
  CHECK(check_regex("a*").wheeler);
  CHECK(check_regex("a*").square_states == 0);
  CHECK(check_regex("ab*").wheeler);
  CHECK(check_regex("(a|b)*").wheeler);
  CHECK(check_regex("a*b*").wheeler);
  // odd and even powers alternate in co-lex order
  CHECK_FALSE(check_regex("a(aa)*").wheeler);
}

TEST_CASE("empty language is Wheeler") {
  Automaton none(Alphabet("a"), 2, 0, {1}, {{1, 0, 1}});
  auto r = recognize(none);
  CHECK(r.wheeler);
  CHECK(r.n_min == 0);
  CHECK(r.square_states == 0);
  CHECK_FALSE(r.witness);
}

TEST_CASE("rejects nondeterministic input") {
  Automaton nd(Alphabet("a"), 2, 0, {1}, {{0, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(recognize(nd), Error);
}

TEST_CASE("decision depends only on the language") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 1000; ++i) {
    Automaton a = testing::random_small_dfa(rng, 12, 3);
    auto r = recognize(a);
    CHECK(r.wheeler == !r.witness.has_value());
    CHECK(r.wheeler == recognize(minimize(a).automaton).wheeler);
    CHECK(r.wheeler == recognize_via_full_square(a));
    if (r.square_states > 0) {
      CHECK(r.square_states <= 2 * r.n_min * (r.width_estimate - 1));
      CHECK(r.square_transitions <= 2 * r.m_min * (r.width_estimate - 1));
    }
  }
}

TEST_CASE("json report fields") {
  auto a = compile_regex(parse_regex("(aa)*"));
  auto j = report_to_json(recognize(a, InputMode::Regex), a.alphabet());
  for (const char* key : {"wheeler", "input_mode", "n", "m", "n_min", "m_min", "width_estimate",
                          "square_states", "square_transitions", "witness", "timings_ms"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["wheeler"] == false);
  CHECK(j["input_mode"] == "regex");
  CHECK(j["witness"]["labels"] == "aa");
  CHECK(j["witness"]["cycle"].size() == 2);
  auto w = report_to_json(recognize(compile_regex(parse_regex("a*"))), Alphabet("a"));
  CHECK(w["witness"].is_null());
  CHECK(w["input_mode"] == "dfa");
}
