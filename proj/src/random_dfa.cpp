#include <algorithm>
#include <random>

#include "wheeler/automaton.hpp"

namespace wheeler {

// Spanning tree from the source first, so every state is reachable; the
// remaining edges fill uniformly chosen free (state, symbol) slots.
Automaton random_dfa(StateId num_states, std::size_t num_transitions, const Alphabet& sigma,
                     std::uint64_t seed) {
  const std::size_t k = sigma.size();
  if (num_states == 0) throw Error("random_dfa: need at least one state");
  if (k == 0 && num_states > 1) throw Error("random_dfa: empty alphabet cannot connect states");
  if (num_transitions + 1 < num_states) {
    throw Error("random_dfa: m = " + std::to_string(num_transitions) +
                " is too small to connect n = " + std::to_string(num_states) + " states");
  }
  if (num_transitions > static_cast<std::size_t>(num_states) * k) {
    throw Error("random_dfa: m = " + std::to_string(num_transitions) + " exceeds n * |sigma| = " +
                std::to_string(static_cast<std::size_t>(num_states) * k));
  }

  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };

  std::vector<std::uint8_t> used(static_cast<std::size_t>(num_states) * k, 0);
  std::vector<Transition> transitions;
  transitions.reserve(num_transitions);

  // Free slots of already attached states; swap-remove keeps picks O(1).
  std::vector<std::size_t> open;
  auto attach = [&](StateId u) {
    for (std::size_t c = 0; c < k; ++c) open.push_back(static_cast<std::size_t>(u) * k + c);
  };
  attach(0);
  for (StateId v = 1; v < num_states; ++v) {
    std::size_t pick = uniform(open.size());
    std::size_t slot = open[pick];
    open[pick] = open.back();
    open.pop_back();
    used[slot] = 1;
    transitions.push_back(
        {static_cast<StateId>(slot / k), static_cast<Symbol>(slot % k), v});
    attach(v);
  }

  std::vector<std::size_t> free_slots;
  free_slots.reserve(used.size() - transitions.size());
  for (std::size_t slot = 0; slot < used.size(); ++slot) {
    if (!used[slot]) free_slots.push_back(slot);
  }
  const std::size_t extra = num_transitions - transitions.size();
  // Partial Fisher-Yates: the first `extra` entries become a uniform sample.
  for (std::size_t i = 0; i < extra; ++i) {
    std::size_t j = i + uniform(free_slots.size() - i);
    std::swap(free_slots[i], free_slots[j]);
    std::size_t slot = free_slots[i];
    transitions.push_back({static_cast<StateId>(slot / k), static_cast<Symbol>(slot % k),
                           static_cast<StateId>(uniform(num_states))});
  }

  std::vector<StateId> finals;
  while (finals.empty()) {
    for (StateId u = 0; u < num_states; ++u) {
      if (rng() & 1) finals.push_back(u);
    }
  }
  return Automaton(sigma, num_states, 0, std::move(finals), std::move(transitions));
}

}  // namespace wheeler
