#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wheeler/automaton.hpp"

namespace wheeler {

/// Which end of the co-lex interval of a state.
enum class Bound : std::uint8_t { Inf = 0, Sup = 1 };

/// Left-infinite string ...period period period preperiod, over symbol indices.
/// An empty period means the string is finite (just the preperiod).
struct EventuallyPeriodicString {
  std::vector<Symbol> preperiod;
  std::vector<Symbol> period;

  bool finite() const { return period.empty(); }

  /// Symbol at distance `i` from the right end, or -1 when a finite string has
  /// fewer than i+1 characters.
  int from_end(std::size_t i) const;

  std::string to_string(const Alphabet& alphabet) const;

  bool operator==(const EventuallyPeriodicString&) const = default;
};

/// Exact co-lex comparison: characters are compared right to left by alphabet
/// index, and a string that runs out first is the smaller one.
std::strong_ordering compare_eps(const EventuallyPeriodicString& x,
                                 const EventuallyPeriodicString& y);

/// Keeps, for every state, only the incoming edges carrying its smallest
/// incoming label. Does not preserve the language.
Automaton prune_min_edges(const Automaton& a);
/// Same with the largest incoming label.
Automaton prune_max_edges(const Automaton& a);

/// Co-lex ranks of inf I_u and sup I_u for every state of a trimmed DFA.
///
/// The 2n strings {inf I_u} and {sup I_u} are dense-ranked jointly starting at
/// 1; equal strings share a rank. The table also remembers, per element, the
/// predecessor edge whose string realises the bound, so the bound strings can
/// be spelled out by extract_infsup_string.
class RankTable {
 public:
  struct Choice {
    StateId from = kNoState;  // kNoState: the empty string at the source
    Symbol symbol = 0;
  };

  RankTable() = default;

  StateId num_states() const { return static_cast<StateId>(rank_.size() / 2); }
  std::uint32_t rank(StateId u, Bound which) const { return rank_[element(u, which)]; }
  std::uint32_t inf_rank(StateId u) const { return rank(u, Bound::Inf); }
  std::uint32_t sup_rank(StateId u) const { return rank(u, Bound::Sup); }
  bool singleton(StateId u) const { return inf_rank(u) == sup_rank(u); }

  const Choice& choice(StateId u, Bound which) const { return choice_[element(u, which)]; }

  /// Number of refinement rounds run until the ranks stopped changing.
  std::size_t rounds() const { return rounds_; }
  std::uint32_t distinct_ranks() const { return distinct_; }

  static std::size_t element(StateId u, Bound which) {
    return 2 * static_cast<std::size_t>(u) + static_cast<std::size_t>(which);
  }

 private:
  friend struct RankTableBuilder;
  std::vector<std::uint32_t> rank_;
  std::vector<Choice> choice_;
  std::size_t rounds_ = 0;
  std::uint32_t distinct_ = 0;
};

struct RankOptions {
  // Restrict inf candidates to min-label edges and sup candidates to max-label
  // edges. The result is identical either way; pruning only saves work.
  bool prune_edges = true;
};

/// Iterated truncated-rank refinement. Round k ranks the length-k suffixes of
/// all inf/sup strings: an element's key is its chosen last symbol followed by
/// the round-(k-1) rank of the predecessor element, with the empty string at
/// the source below every symbol. Stops when two consecutive rounds agree.
///
/// Requires a deterministic, trimmed automaton. Throws Error if the refinement
/// does not settle within 8n+8 rounds or stops refining monotonically.
RankTable compute_rank_table(const Automaton& a, RankOptions options = {});

/// Spells inf I_u or sup I_u by walking the chosen predecessors backwards
/// until the source's empty string (finite result) or a repeated element
/// (eventually periodic result).
EventuallyPeriodicString extract_infsup_string(const RankTable& table, StateId u, Bound which);

/// I(u) and I(v) as open intervals; singleton states have empty intervals.
bool intervals_intersect(const RankTable& table, StateId u, StateId v);

/// Clique number of the open-interval intersection graph over non-singleton
/// states, by an endpoint sweep. At least 1.
std::size_t width_estimate(const RankTable& table);

}  // namespace wheeler
