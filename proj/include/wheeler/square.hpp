#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/colex.hpp"

namespace wheeler {

struct StatePair {
  StateId first = 0;
  StateId second = 0;

  auto operator<=>(const StatePair&) const = default;
};

struct PairTransition {
  StatePair from;
  Symbol symbol = 0;
  StatePair to;

  auto operator<=>(const PairTransition&) const = default;
};

/// Explicit labeled graph over state pairs, both lists sorted and duplicate
/// free. Produced by the naive full-square construction and by
/// PrunedSquare::materialize().
struct SquareGraph {
  std::vector<StatePair> states;
  std::vector<PairTransition> transitions;

  bool operator==(const SquareGraph&) const = default;
};

/// A cycle of pair-states (u_i, v_i) and the string it reads:
/// labels[i] leads from cycle[i] to cycle[(i + 1) % k] in both components.
struct Witness {
  std::vector<StatePair> cycle;
  std::vector<Symbol> labels;

  bool operator==(const Witness&) const = default;
};

/// The square of a minimum DFA restricted to pairs (u, v) with u != v whose
/// open co-lex intervals intersect, built in time proportional to its size.
///
/// Layout: non-singleton states sorted by inf rank (ties by id). Each state's
/// intersecting successors in that order form one contiguous run, so a pair
/// with positions i < j has "upper" index off[i] + (j - i - 1), and the pair
/// states are 2 * upper (orientation (u_i, u_j)) and 2 * upper + 1 (mirror).
/// Only transitions leaving even indices are stored; the mirrored transition
/// (v, u) -c-> (v', u') is implied, since the square is symmetric.
class PrunedSquare {
 public:
  using Index = std::uint32_t;

  std::size_t num_states() const { return 2 * static_cast<std::size_t>(upper_count()); }
  std::size_t num_transitions() const { return 2 * targets_.size(); }
  bool empty() const { return num_states() == 0; }

  bool contains(StateId u, StateId v) const { return index_of(u, v).has_value(); }
  std::optional<Index> index_of(StateId u, StateId v) const;
  StatePair pair_at(Index index) const;

  /// Calls f(symbol, target_index) for every transition leaving `index`.
  template <typename F>
  void for_each_out(Index index, F&& f) const {
    const Index upper = index >> 1;
    const Index flip = index & 1;
    for (std::size_t e = offset_[upper]; e < offset_[upper + 1]; ++e) {
      f(symbols_[e], targets_[e] ^ flip);
    }
  }

  /// Calls f(symbol, source_index) for every transition entering `index`.
  template <typename F>
  void for_each_in(Index index, F&& f) const;

  SquareGraph materialize() const;

  Index upper_count() const { return static_cast<Index>(offset_.size() - 1); }

 private:
  friend PrunedSquare build_pruned_square(const Automaton&, const RankTable&);
  friend bool is_acyclic(const PrunedSquare&);
  friend std::optional<Witness> extract_witness(const PrunedSquare&);

  std::vector<StateId> order_;        // sorted non-singleton states
  std::vector<StateId> pos_;          // state -> position in order_, or kNoState
  std::vector<std::uint32_t> reach_;  // last position intersecting position i
  std::vector<Index> pair_offset_;    // first upper index of position i (size+1)
  std::vector<Index> offset_{0};      // CSR over upper indices
  std::vector<Index> targets_;
  std::vector<Symbol> symbols_;
  // Incoming edges of the minimum DFA (predecessor state, symbol), by target.
  std::vector<std::size_t> in_offset_;
  std::vector<Transition> in_edges_;
};

/// Direct construction from the rank table: a two-pointer run scan for the
/// pair-states, then one two-pointer scan per symbol over the states having
/// that out-edge.
PrunedSquare build_pruned_square(const Automaton& a_min, const RankTable& table);

/// Materializes all n^2 pairs and filters them; used as an oracle.
SquareGraph build_full_square(const Automaton& a_min, const RankTable& table);

/// Kahn peeling. The pruned square is peeled on its quotient by the pair swap,
/// which has a cycle exactly when the square does.
bool is_acyclic(const PrunedSquare& square);
bool is_acyclic(const SquareGraph& graph);

/// A cycle inside the part left over by Kahn peeling, found by walking
/// backwards until a pair-state repeats. nullopt iff the graph is acyclic.
std::optional<Witness> extract_witness(const PrunedSquare& square);
std::optional<Witness> extract_witness(const SquareGraph& graph);

/// Checks every witness condition directly against the DFA and rank table.
bool verify_witness(const Automaton& a_min, const RankTable& table, const Witness& w);

template <typename F>
void PrunedSquare::for_each_in(Index index, F&& f) const {
  const StatePair p = pair_at(index);
  const auto in_u_begin = in_offset_[p.first], in_u_end = in_offset_[p.first + 1];
  const auto in_v_begin = in_offset_[p.second], in_v_end = in_offset_[p.second + 1];
  for (auto i = in_u_begin; i < in_u_end; ++i) {
    for (auto j = in_v_begin; j < in_v_end; ++j) {
      if (in_edges_[i].symbol != in_edges_[j].symbol) continue;
      if (auto src = index_of(in_edges_[i].from, in_edges_[j].from)) f(in_edges_[i].symbol, *src);
    }
  }
}

}  // namespace wheeler
