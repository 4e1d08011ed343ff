#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wheeler/automaton.hpp"
#include "wheeler/square.hpp"

namespace wheeler {

using BitVector = std::vector<std::uint8_t>;  // entries 0 or 1

/// Orthogonal vectors instance: two families of N vectors of dimension d.
/// Vector indices are 1-based in every public function that reports them.
struct OvInstance {
  std::size_t N = 0;
  std::size_t d = 0;
  std::vector<BitVector> A;
  std::vector<BitVector> B;

  /// log2(N).
  std::size_t ell() const;

  /// Throws Error unless N is a power of two, d >= 1, every vector has d
  /// binary entries and the vectors of A are pairwise distinct.
  void validate() const;

  bool operator==(const OvInstance&) const = default;
};

/// Line 1 "N d", then N lines of A, then N lines of B, each a 0/1 string.
/// Blank lines and lines starting with '#' are skipped.
OvInstance parse_ov_instance(std::string_view text);
OvInstance read_ov_file(const std::string& path);
std::string serialize_ov_instance(const OvInstance& inst);

/// Lexicographically first (r, s) with a_r . b_s = 0, 1-based.
std::optional<std::pair<std::size_t, std::size_t>> ov_bruteforce(const OvInstance& inst);

enum class OvForce { Any, Yes, No };

/// Reproducible from `seed`. Yes plants an orthogonal pair; No resamples until
/// none exists. Throws Error when N > 2^d or No cannot be met.
OvInstance random_ov_instance(std::size_t N, std::size_t d, std::uint64_t seed,
                              OvForce force = OvForce::Any);

/// State ids of the generated automaton. Regions are laid out consecutively:
/// out-tree, connector nodes, the 2N cycles (A cycles first), in-tree.
class OvDfaLayout {
 public:
  enum class Region { OutTree, Connector, CycleA, CycleB, InTree };

  struct Node {
    Region region;
    std::uint32_t index;  // 1-based cycle or vector index; 0 for tree nodes
    std::uint32_t pos;    // position inside the region block
  };

  OvDfaLayout() = default;
  OvDfaLayout(std::size_t N, std::size_t d);

  std::size_t N() const { return N_; }
  std::size_t d() const { return d_; }
  std::size_t ell() const { return ell_; }
  std::size_t cycle_length() const { return d_ + ell_ + 1; }
  StateId num_states() const { return in_base_ + tree_size(); }

  // Trees: node of depth k whose path string, read as an MSB-first number, is v.
  // For the in-tree the string is the one still to be read before t.
  StateId out_node(std::size_t k, std::uint64_t v) const;
  StateId in_node(std::size_t k, std::uint64_t v) const;
  StateId source() const { return out_node(0, 0); }
  StateId sink() const { return in_node(0, 0); }

  StateId x(std::size_t i) const { return out_node(ell_ + 1, i - 1); }
  StateId y(std::size_t j) const { return out_node(ell_ + 1, N_ + j - 1); }
  StateId x1(std::size_t i) const { return conn_base_ + (i - 1); }           // x_i'
  StateId x2(std::size_t i) const { return conn_base_ + N_ + (i - 1); }      // x_i''
  StateId a_hat_in(std::size_t i) const { return conn_base_ + 2 * N_ + (i - 1); }
  StateId y1(std::size_t j) const { return conn_base_ + 3 * N_ + (j - 1); }  // y_j'
  StateId b_hat_in(std::size_t j) const { return conn_base_ + 4 * N_ + (j - 1); }

  // Position 0 is the hat node, 1..d the vector positions, d+1..d+ell the
  // free or index steps.
  StateId cycle_a(std::size_t i, std::size_t pos) const;
  StateId cycle_b(std::size_t j, std::size_t pos) const;
  StateId t(std::size_t i) const { return in_node(ell_ + 1, 2 * (i - 1)); }
  StateId z(std::size_t j) const { return in_node(ell_ + 1, 2 * (j - 1) + 1); }

  Node node(StateId u) const;

  /// rho(i): the ell-bit MSB-first binary form of i - 1.
  std::vector<std::uint8_t> rho(std::size_t i) const;

 private:
  StateId tree_size() const { return static_cast<StateId>(4 * N_ - 1); }

  std::size_t N_ = 0;
  std::size_t d_ = 0;
  std::size_t ell_ = 0;
  StateId conn_base_ = 0;
  StateId cycle_base_ = 0;
  StateId in_base_ = 0;
};

struct OvDfa {
  Automaton automaton;
  OvDfaLayout layout;
};

/// Alphabet "01#"; the single final state is the in-tree root.
OvDfa build_ov_dfa(const OvInstance& inst);

/// Replaces 0 by 00, 1 by 11 and # by 101 through fresh states, numbered after
/// the original ones in transition order. Throws Error on other symbols.
Automaton to_binary_alphabet(const Automaton& a);

/// (r, s) such that the witness runs through A cycle r and B cycle s.
/// State ids are those of the generated automaton. Throws Error otherwise.
std::pair<std::size_t, std::size_t> decode_witness(const OvDfaLayout& layout, const Witness& w);

}  // namespace wheeler
