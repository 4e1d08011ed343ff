#include "support.hpp"

#include <algorithm>
#include <map>

namespace wheeler::testing {

Automaton random_small_dfa(std::mt19937_64& rng, StateId max_n, std::size_t max_sigma) {
  StateId n = 1 + static_cast<StateId>(rng() % max_n);
  std::size_t sigma = 1 + rng() % max_sigma;
  std::size_t lo = n - 1;
  std::size_t hi = static_cast<std::size_t>(n) * sigma;
  std::size_t m = lo + rng() % (hi - lo + 1);
  return random_dfa(n, m, Alphabet(std::string("abc").substr(0, sigma)), rng());
}

std::size_t nerode_classes(const Automaton& input) {
  Automaton a = trim(input).automaton;
  const std::size_t n = a.num_states();
  if (n == 0) return 0;
  const std::size_t sink = n;
  const std::size_t sigma = a.alphabet().size();
  auto step = [&](std::size_t u, std::size_t c) -> std::size_t {
    if (u == sink) return sink;
    StateId v = a.next(static_cast<StateId>(u), static_cast<Symbol>(c));
    return v == kNoState ? sink : v;
  };
  auto fin = [&](std::size_t u) { return u != sink && a.is_final(static_cast<StateId>(u)); };
  std::vector<std::vector<char>> dist(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t u = 0; u <= n; ++u)
    for (std::size_t v = 0; v <= n; ++v) dist[u][v] = fin(u) != fin(v);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u <= n; ++u) {
      for (std::size_t v = 0; v <= n; ++v) {
        if (dist[u][v]) continue;
        for (std::size_t c = 0; c < sigma; ++c) {
          if (dist[step(u, c)][step(v, c)]) {
            dist[u][v] = 1;
            changed = true;
            break;
          }
        }
      }
    }
  }
  std::size_t classes = 0;
  for (std::size_t u = 0; u < n; ++u) {
    bool fresh = true;
    for (std::size_t v = 0; v < u; ++v) fresh = fresh && dist[u][v];
    classes += fresh;
  }
  return classes;
}

std::vector<std::vector<Symbol>> all_words(std::size_t sigma, std::size_t max_len) {
  std::vector<std::vector<Symbol>> out{{}};
  for (std::size_t begin = 0, len = 0; len < max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t c = 0; c < sigma; ++c) {
        auto w = out[i];
        w.push_back(static_cast<Symbol>(c));
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

bool same_words_up_to(const Automaton& a, const Automaton& b, std::size_t max_len) {
  auto accepts = [](const Automaton& x, const std::vector<Symbol>& w) {
    return !x.empty() && x.accepts(w);
  };
  for (const auto& w : all_words(a.alphabet().size(), max_len)) {
    if (accepts(a, w) != accepts(b, w)) return false;
  }
  return true;
}

std::vector<std::vector<Symbol>> truncated_bounds(const Automaton& a, std::size_t k, Bound which) {
  const StateId n = a.num_states();
  std::vector<std::vector<Symbol>> cur(n);
  for (std::size_t round = 0; round < k; ++round) {
    std::vector<std::optional<std::vector<Symbol>>> next(n);
    auto offer = [&](StateId u, std::vector<Symbol> s) {
      if (!next[u] || (which == Bound::Inf ? s < *next[u] : s > *next[u])) next[u] = std::move(s);
    };
    offer(a.source(), {});
    for (const auto& t : a.transitions()) {
      std::vector<Symbol> s{t.symbol};
      s.insert(s.end(), cur[t.from].begin(), cur[t.from].end());
      offer(t.to, std::move(s));
    }
    for (StateId u = 0; u < n; ++u) cur[u] = next[u] ? *next[u] : std::vector<Symbol>{};
  }
  return cur;
}

std::vector<std::uint32_t> oracle_ranks(const Automaton& a) {
  const std::size_t k = 6 * static_cast<std::size_t>(a.num_states()) + 6;
  auto inf = truncated_bounds(a, k, Bound::Inf);
  auto sup = truncated_bounds(a, k, Bound::Sup);
  std::vector<std::vector<Symbol>> all;
  for (StateId u = 0; u < a.num_states(); ++u) {
    all.push_back(inf[u]);
    all.push_back(sup[u]);
  }
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> ranks;
  for (const auto& s : all) {
    ranks.push_back(
        static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin() + 1));
  }
  return ranks;
}

bool has_cycle(const SquareGraph& g) {
  std::map<StatePair, std::vector<StatePair>> adj;
  for (const auto& t : g.transitions) adj[t.from].push_back(t.to);
  std::map<StatePair, int> colour;
  for (const auto& start : g.states) {
    if (colour[start]) continue;
    std::vector<std::pair<StatePair, std::size_t>> stack{{start, 0}};
    colour[start] = 1;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      auto& out = adj[u];
      if (i == out.size()) {
        colour[u] = 2;
        stack.pop_back();
        continue;
      }
      StatePair v = out[i++];
      if (colour[v] == 1) return true;
      if (colour[v] == 0) {
        colour[v] = 1;
        stack.push_back({v, 0});
      }
    }
  }
  return false;
}

std::vector<Symbol> reversed(std::vector<Symbol> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace wheeler::testing
