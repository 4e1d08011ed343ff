#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wheeler/automaton.hpp"
#include "wheeler/colex.hpp"
#include "wheeler/square.hpp"

namespace wheeler {

enum class InputMode { Dfa, Regex };

struct StageTimings {
  double trim_ms = 0;
  double minimize_ms = 0;
  double rank_ms = 0;
  double square_ms = 0;
  double acyclic_ms = 0;
  double witness_ms = 0;

  double total_ms() const {
    return trim_ms + minimize_ms + rank_ms + square_ms + acyclic_ms + witness_ms;
  }
};

struct Report {
  bool wheeler = true;
  std::size_t n = 0;  // input automaton
  std::size_t m = 0;
  std::size_t n_min = 0;
  std::size_t m_min = 0;
  std::size_t width_estimate = 1;
  std::size_t square_states = 0;
  std::size_t square_transitions = 0;
  std::optional<Witness> witness;  // over the states of the minimum DFA
  StageTimings timings;
  InputMode input_mode = InputMode::Dfa;
  std::size_t rank_rounds = 0;
};

/// Everything the pipeline computed, for callers that want more than the
/// verdict (tests, witness decoding).
struct Recognition {
  Report report;
  Automaton minimum;
  RankTable ranks;
};

/// trim -> minimize -> rank table -> pruned square -> Kahn -> witness.
/// Throws Error on nondeterministic input.
Recognition recognize_full(const Automaton& a, InputMode mode = InputMode::Dfa);
Report recognize(const Automaton& a, InputMode mode = InputMode::Dfa);

/// Same decision through the naive full square; used as an oracle.
bool recognize_via_full_square(const Automaton& a);

/// Witness strings are spelled with the alphabet of the minimum DFA.
nlohmann::json report_to_json(const Report& report, const Alphabet& alphabet);

}  // namespace wheeler
