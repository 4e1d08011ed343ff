#pragma once

#include <optional>
#include <vector>

#include "wheeler/automaton.hpp"

namespace wheeler {

struct MinimizeResult {
  Automaton automaton;
  // input state -> output state; nullopt for states removed by trimming
  std::vector<std::optional<StateId>> state_map;
};

/// Minimum DFA by Hopcroft partition refinement. The input is trimmed first;
/// missing transitions are treated as edges into an implicit sink that never
/// appears in the output. Output states are numbered by the smallest input
/// state of their class. Throws Error on nondeterministic input.
MinimizeResult minimize(const Automaton& a);

/// Exact language equality of two DFAs over the same alphabet, by exploring the
/// synchronized product (with implicit dead states). Throws Error when the
/// alphabets differ or an input is nondeterministic.
bool equivalent(const Automaton& a, const Automaton& b);

}  // namespace wheeler
