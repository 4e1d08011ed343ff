#include "wheeler/bench.hpp"

#include <string>

#include "wheeler/automaton.hpp"
#include "wheeler/recognizer.hpp"

namespace wheeler {

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw Error("bench: no sizes given");
  if (config.sigma == 0 || config.sigma > 26) throw Error("bench: sigma must be in 1..26");
  std::string letters;
  for (std::size_t c = 0; c < config.sigma; ++c) letters += static_cast<char>('a' + c);
  const Alphabet sigma(letters);

  std::vector<BenchRow> rows;
  for (auto n : config.sizes) {
    for (auto seed : config.seeds) {
      const std::size_t m = config.edge_factor * n;
      Automaton a = random_dfa(n, m, sigma, seed);
      Report r = recognize(a);
      BenchRow row;
      row.n = n;
      row.m = m;
      row.sigma = config.sigma;
      row.seed = seed;
      row.p_hat = r.width_estimate;
      row.n_min = r.n_min;
      row.m_min = r.m_min;
      row.square_states = r.square_states;
      row.square_transitions = r.square_transitions;
      row.wheeler = r.wheeler;
      row.trim_ms = r.timings.trim_ms;
      row.minimize_ms = r.timings.minimize_ms;
      row.rank_ms = r.timings.rank_ms;
      row.square_ms = r.timings.square_ms;
      row.acyclic_ms = r.timings.acyclic_ms;
      row.witness_ms = r.timings.witness_ms;
      row.total_ms = r.timings.total_ms();
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_csv_header() {
  return "n,m,sigma,seed,p_hat,n_min,m_min,square_states,square_transitions,wheeler,"
         "trim_ms,minimize_ms,rank_ms,square_ms,acyclic_ms,witness_ms,total_ms";
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << bench_csv_header() << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.m << ',' << r.sigma << ',' << r.seed << ',' << r.p_hat << ','
        << r.n_min << ',' << r.m_min << ',' << r.square_states << ',' << r.square_transitions
        << ',' << (r.wheeler ? 1 : 0) << ',' << r.trim_ms << ',' << r.minimize_ms << ','
        << r.rank_ms << ',' << r.square_ms << ',' << r.acyclic_ms << ',' << r.witness_ms << ','
        << r.total_ms << '\n';
  }
}

}  // namespace wheeler
