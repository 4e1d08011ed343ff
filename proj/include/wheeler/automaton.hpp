#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wheeler {

using StateId = std::uint32_t;
using Symbol = std::uint8_t;  // index into an Alphabet, not a character

inline constexpr StateId kNoState = static_cast<StateId>(-1);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed automaton text or regular expression.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A construction exceeded a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Ordered set of single printable characters. The order in which symbols are
/// given is the character order used for all co-lexicographic comparisons.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  char symbol(Symbol s) const { return symbols_[s]; }
  std::optional<Symbol> index_of(char c) const;
  const std::string& symbols() const { return symbols_; }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_;
};

struct Transition {
  StateId from = 0;
  Symbol symbol = 0;
  StateId to = 0;

  auto operator<=>(const Transition&) const = default;
};

/// A finite automaton over dense state ids 0..n-1. Deterministic automata are
/// partial: a missing (state, symbol) pair means the run dies.
///
/// Immutable after construction. Transitions are kept sorted by
/// (from, symbol, to); the determinism flag is computed, never trusted.
class Automaton {
 public:
  Automaton() = default;

  /// Throws Error when an id or symbol is out of range or a transition is
  /// repeated. `source` is ignored when `num_states` is 0.
  Automaton(Alphabet alphabet, StateId num_states, StateId source,
            std::vector<StateId> finals, std::vector<Transition> transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  StateId num_states() const { return num_states_; }
  std::size_t num_transitions() const { return transitions_.size(); }
  StateId source() const { return source_; }
  bool empty() const { return num_states_ == 0; }

  const std::vector<StateId>& finals() const { return finals_; }
  bool is_final(StateId u) const { return final_flag_[u] != 0; }

  bool deterministic() const { return deterministic_; }

  const std::vector<Transition>& transitions() const { return transitions_; }

  /// Outgoing transitions of `u`, sorted by symbol.
  std::span<const Transition> out(StateId u) const {
    return {transitions_.data() + out_offset_[u], transitions_.data() + out_offset_[u + 1]};
  }

  /// Deterministic successor, or kNoState. Requires deterministic().
  StateId next(StateId u, Symbol c) const {
    return delta_[static_cast<std::size_t>(u) * alphabet_.size() + c];
  }

  /// Runs `word` from the source. Requires deterministic().
  StateId run(std::span<const Symbol> word) const;
  bool accepts(std::span<const Symbol> word) const;

  bool operator==(const Automaton& other) const;

 private:
  Alphabet alphabet_;
  StateId num_states_ = 0;
  StateId source_ = 0;
  std::vector<StateId> finals_;
  std::vector<std::uint8_t> final_flag_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> out_offset_{0};
  std::vector<StateId> delta_;
  bool deterministic_ = true;
};

/// Maps a character string to symbol indices; throws Error on unknown
/// characters.
std::vector<Symbol> encode(const Alphabet& alphabet, std::string_view text);
std::string decode(const Alphabet& alphabet, std::span<const Symbol> word);

// --- text interchange format ---

Automaton parse_automaton(std::string_view text);
std::string serialize_automaton(const Automaton& a);

Automaton read_automaton_file(const std::string& path);
void write_automaton_file(const Automaton& a, const std::string& path);

// --- structural operations ---

struct TrimReport {
  StateId kept = 0;
  StateId dropped_unreachable = 0;
  StateId dropped_dead = 0;
  std::vector<std::optional<StateId>> state_map;  // old id -> new id
};

struct TrimResult {
  Automaton automaton;
  TrimReport report;
};

/// Keeps exactly the states that are reachable from the source and can reach a
/// final state. Surviving states keep their relative order. An empty language
/// yields the 0-state automaton.
TrimResult trim(const Automaton& a);

/// Reverses every transition. Source and finals are left untouched.
Automaton reverse(const Automaton& a);

/// Random deterministic automaton with exactly `num_transitions` edges, every
/// state reachable from source 0 and at least one final state.
/// Throws Error when the size combination is infeasible.
Automaton random_dfa(StateId num_states, std::size_t num_transitions,
                     const Alphabet& sigma, std::uint64_t seed);

}  // namespace wheeler
