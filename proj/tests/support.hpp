#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/colex.hpp"
#include "wheeler/square.hpp"

namespace wheeler::testing {

// Random DFA with 1..max_n states over 1..max_sigma letters and a random
// number of transitions.
Automaton random_small_dfa(std::mt19937_64& rng, StateId max_n, std::size_t max_sigma);

// Number of Myhill-Nerode classes among the useful states, by table filling.
std::size_t nerode_classes(const Automaton& a);

// Compares acceptance of every word up to max_len.
bool same_words_up_to(const Automaton& a, const Automaton& b, std::size_t max_len);

// All words over the alphabet up to max_len, shortest first.
std::vector<std::vector<Symbol>> all_words(std::size_t sigma, std::size_t max_len);

// Per state, the last k symbols of inf I_u (or sup I_u), rightmost first. A
// string shorter than k is given in full. Built from explicit strings.
std::vector<std::vector<Symbol>> truncated_bounds(const Automaton& a, std::size_t k, Bound which);

// Dense ranks of all 2n bounds, computed from truncated_bounds; the layout
// matches RankTable::element.
std::vector<std::uint32_t> oracle_ranks(const Automaton& a);

// Directed cycle by three-colour DFS.
bool has_cycle(const SquareGraph& g);

// Every length-k suffix: rightmost symbol first, as in truncated_bounds.
std::vector<Symbol> reversed(std::vector<Symbol> w);

}  // namespace wheeler::testing
