#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wheeler/minimize.hpp"

using namespace wheeler;

TEST_CASE("collapses equivalent states") {
  Alphabet a("a");
  // a* written with three states
  Automaton three(a, 3, 0, {0, 1, 2}, {{0, 0, 1}, {1, 0, 2}, {2, 0, 0}});
  auto r = minimize(three);
  CHECK(r.automaton.num_states() == 1);
  CHECK(r.automaton.num_transitions() == 1);
  CHECK(r.state_map[0] == 0);
  CHECK(r.state_map[2] == 0);
}

TEST_CASE("empty language gives the empty automaton") {
  Automaton a(Alphabet("ab"), 2, 0, {}, {{0, 0, 1}});
  CHECK(minimize(a).automaton.empty());
}

TEST_CASE("rejects nondeterministic input") {
  Automaton nd(Alphabet("a"), 2, 0, {1}, {{0, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(minimize(nd), Error);
  CHECK_THROWS_AS(equivalent(nd, nd), Error);
}

TEST_CASE("Hopcroft agrees with table filling") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Automaton a = testing::random_small_dfa(rng, 12, 3);
    auto m = minimize(a).automaton;
    CHECK(m.num_states() == testing::nerode_classes(a));
    CHECK(equivalent(a, m));
    CHECK(testing::same_words_up_to(a, m, 5));
    CHECK(minimize(m).automaton == m);
  }
}

TEST_CASE("equivalent detects a difference") {
  Alphabet ab("ab");
  Automaton x(ab, 1, 0, {0}, {{0, 0, 0}});
  Automaton y(ab, 1, 0, {0}, {{0, 0, 0}, {0, 1, 0}});
  CHECK_FALSE(equivalent(x, y));
  CHECK(equivalent(x, x));
  CHECK_THROWS_AS(equivalent(x, Automaton(Alphabet("a"), 1, 0, {0}, {})), Error);
}
