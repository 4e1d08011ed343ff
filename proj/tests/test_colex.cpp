#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "wheeler/colex.hpp"
#include "wheeler/minimize.hpp"
#include "wheeler/regex.hpp"

using namespace wheeler;

namespace {

using EPS = EventuallyPeriodicString;

// The last k characters, rightmost first; shorter finite strings in full.
std::vector<int> materialize(const EPS& x, std::size_t k) {
  std::vector<int> out;
  for (std::size_t i = 0; i < k && x.from_end(i) >= 0; ++i) out.push_back(x.from_end(i));
  return out;
}

EPS random_eps(std::mt19937_64& rng) {
  EPS x;
  std::size_t pre = rng() % 4;
  std::size_t per = rng() % 4;
  for (std::size_t i = 0; i < pre; ++i) x.preperiod.push_back(static_cast<Symbol>(rng() % 2));
  for (std::size_t i = 0; i < per; ++i) x.period.push_back(static_cast<Symbol>(rng() % 2));
  return x;
}

Automaton random_minimum(std::mt19937_64& rng, StateId max_n) {
  for (;;) {
    Automaton m = minimize(testing::random_small_dfa(rng, max_n, 3)).automaton;
    if (!m.empty()) return m;
  }
}

std::size_t brute_width(const RankTable& t) {
  std::uint32_t top = 0;
  for (StateId u = 0; u < t.num_states(); ++u) top = std::max(top, t.sup_rank(u));
  std::size_t best = 1;
  // points strictly between consecutive ranks, doubled to stay integral
  for (std::uint32_t x2 = 3; x2 < 2 * top; x2 += 2) {
    std::size_t count = 0;
    for (StateId u = 0; u < t.num_states(); ++u) {
      if (!t.singleton(u) && 2 * t.inf_rank(u) < x2 && x2 < 2 * t.sup_rank(u)) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace

TEST_CASE("eventually periodic strings") {
  EPS x{{1}, {0, 1}};  // ...0101 1
  CHECK(x.from_end(0) == 1);
  CHECK(x.from_end(1) == 1);
  CHECK(x.from_end(2) == 0);
  CHECK(x.from_end(3) == 1);
  CHECK(EPS{{0}, {}}.from_end(1) == -1);
  Alphabet ab("ab");
  CHECK(x.to_string(ab) == "(ab)^wb");
  CHECK(EPS{}.to_string(ab) == "eps");
}

TEST_CASE("compare_eps small cases") {
  EPS eps{};
  EPS a{{0}, {}};
  EPS aw{{}, {0}};
  EPS ba{{1, 0}, {}};
  CHECK(compare_eps(eps, a) == std::strong_ordering::less);
  CHECK(compare_eps(a, aw) == std::strong_ordering::less);
  CHECK(compare_eps(aw, ba) == std::strong_ordering::less);
  // two spellings of the same string
  CHECK(compare_eps(EPS{{0, 1}, {0, 1}}, EPS{{}, {0, 1}}) == std::strong_ordering::equal);
  CHECK(compare_eps(EPS{{1}, {1, 1}}, EPS{{}, {1}}) == std::strong_ordering::equal);
}

TEST_CASE("compare_eps agrees with long materialization") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5000; ++i) {
    EPS x = random_eps(rng), y = random_eps(rng);
    auto mx = materialize(x, 64), my = materialize(y, 64);
    auto expected = mx <=> my;
    CHECK(compare_eps(x, y) == expected);
  }
}

TEST_CASE("rank table on small languages") {
  auto aa = compile_regex(parse_regex("(aa)*"));
  auto t = compute_rank_table(aa);
  // I_0 = even powers (inf eps, sup a^w), I_1 = odd powers (inf a, sup a^w)
  CHECK(t.inf_rank(0) == 1);
  CHECK(t.inf_rank(1) == 2);
  CHECK(t.sup_rank(0) == t.sup_rank(1));
  CHECK(intervals_intersect(t, 0, 1));
  CHECK(width_estimate(t) == 2);
  CHECK(compare_eps(extract_infsup_string(t, 1, Bound::Sup), EPS{{}, {0}}) == std::strong_ordering::equal);
  CHECK(extract_infsup_string(t, 1, Bound::Inf) == EPS{{0}, {}});

  auto ab = compile_regex(parse_regex("ab*"));
  auto s = compute_rank_table(ab);
  CHECK(s.singleton(0));
  CHECK_FALSE(intervals_intersect(s, 0, 1));
  CHECK_FALSE(intervals_intersect(s, 0, 0));
  CHECK(width_estimate(s) == 1);
}

TEST_CASE("ranks match the explicit-string oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    Automaton m = random_minimum(rng, 10);
    auto t = compute_rank_table(m);
    auto expected = testing::oracle_ranks(m);
    for (StateId u = 0; u < m.num_states(); ++u) {
      CHECK(t.inf_rank(u) == expected[RankTable::element(u, Bound::Inf)]);
      CHECK(t.sup_rank(u) == expected[RankTable::element(u, Bound::Sup)]);
    }
    auto unpruned = compute_rank_table(m, {.prune_edges = false});
    for (StateId u = 0; u < m.num_states(); ++u) {
      CHECK(unpruned.inf_rank(u) == t.inf_rank(u));
      CHECK(unpruned.sup_rank(u) == t.sup_rank(u));
    }
  }
}

TEST_CASE("extracted strings order like the ranks") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    Automaton m = random_minimum(rng, 10);
    auto t = compute_rank_table(m);
    std::vector<std::pair<std::uint32_t, EPS>> all;
    for (StateId u = 0; u < m.num_states(); ++u) {
      for (Bound b : {Bound::Inf, Bound::Sup}) all.push_back({t.rank(u, b), extract_infsup_string(t, u, b)});
    }
    for (const auto& [rx, x] : all) {
      for (const auto& [ry, y] : all) CHECK(compare_eps(x, y) == (rx <=> ry));
    }
  }
}

TEST_CASE("width estimate matches brute force") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    Automaton m = random_minimum(rng, 8);
    auto t = compute_rank_table(m);
    CHECK(width_estimate(t) == brute_width(t));
  }
}

TEST_CASE("edge pruning keeps extreme labels") {
  Automaton a(Alphabet("ab"), 2, 0, {1}, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  auto lo = prune_min_edges(a);
  auto hi = prune_max_edges(a);
  CHECK(lo.num_transitions() == 1);
  CHECK(lo.transitions()[0] == Transition{0, 0, 1});
  CHECK(hi.num_transitions() == 2);
}
