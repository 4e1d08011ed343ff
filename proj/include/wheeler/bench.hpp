#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace wheeler {

struct BenchConfig {
  std::vector<std::uint32_t> sizes{500, 1000, 2000, 4000, 8000, 16000};
  std::size_t edge_factor = 3;  // m = edge_factor * n
  std::size_t sigma = 3;
  std::vector<std::uint64_t> seeds{1};
};

struct BenchRow {
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::size_t sigma = 0;
  std::uint64_t seed = 0;
  std::size_t p_hat = 0;
  std::size_t n_min = 0;
  std::size_t m_min = 0;
  std::size_t square_states = 0;
  std::size_t square_transitions = 0;
  bool wheeler = false;
  double trim_ms = 0;
  double minimize_ms = 0;
  double rank_ms = 0;
  double square_ms = 0;
  double acyclic_ms = 0;
  double witness_ms = 0;
  double total_ms = 0;
};

/// One row per (size, seed), ordered by size then seed. Each row runs the
/// recognizer on random_dfa(n, edge_factor * n, first `sigma` lowercase
/// letters, seed).
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Columns, in order:
/// n,m,sigma,seed,p_hat,n_min,m_min,square_states,square_transitions,wheeler,
/// trim_ms,minimize_ms,rank_ms,square_ms,acyclic_ms,witness_ms,total_ms
std::string bench_csv_header();
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace wheeler
