#include "cli.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wheeler/automaton.hpp"
#include "wheeler/bench.hpp"
#include "wheeler/ov.hpp"
#include "wheeler/recognizer.hpp"
#include "wheeler/regex.hpp"

namespace wheeler {
namespace {

constexpr int kUsageError = 2;

struct CheckArgs {
  std::string dfa;
  std::string regex;
  std::string json;
  bool quiet = false;
};

struct GenOvArgs {
  std::vector<std::string> random;
  std::string force = "any";
  std::string file;
  bool binary = false;
  bool solve = false;
  std::string out;
};

struct BenchArgs {
  std::vector<std::uint32_t> sizes;
  std::size_t edge_factor = 3;
  std::size_t sigma = 3;
  std::vector<std::uint64_t> seeds;
  std::string csv;
};

std::string witness_text(const Witness& w, const Alphabet& alphabet) {
  std::string s;
  for (const auto& p : w.cycle) {
    s += "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ") ";
  }
  return s + "labels " + decode(alphabet, w.labels);
}

int run_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  Automaton input;
  InputMode mode = InputMode::Dfa;
  if (!args.dfa.empty()) {
    input = read_automaton_file(args.dfa);
    if (!input.deterministic()) {
      err << "error: " << args.dfa << ": automaton is not deterministic\n";
      return kUsageError;
    }
  } else {
    input = compile_regex(parse_regex(args.regex));
    mode = InputMode::Regex;
  }

  Recognition rec = recognize_full(input, mode);
  const Report& r = rec.report;
  out << (r.wheeler ? "wheeler" : "non-wheeler") << '\n';
  if (!args.quiet) {
    err << "n=" << r.n << " m=" << r.m << " n_min=" << r.n_min << " m_min=" << r.m_min
        << " width_estimate=" << r.width_estimate << " square_states=" << r.square_states
        << " square_transitions=" << r.square_transitions << '\n';
    if (r.witness) err << "witness: " << witness_text(*r.witness, input.alphabet()) << '\n';
  }
  if (!args.json.empty()) {
    std::ofstream f(args.json);
    if (!f) throw Error("cannot write '" + args.json + "'");
    f << report_to_json(r, input.alphabet()).dump(2) << '\n';
  }
  return r.wheeler ? 0 : 1;
}

int run_gen_ov(const GenOvArgs& args, std::ostream& out, std::ostream& err) {
  OvInstance inst;
  if (!args.random.empty()) {
    OvForce force = args.force == "yes" ? OvForce::Yes
                    : args.force == "no" ? OvForce::No
                                         : OvForce::Any;
    inst = random_ov_instance(std::stoull(args.random[0]), std::stoull(args.random[1]),
                              std::stoull(args.random[2]), force);
  } else {
    inst = read_ov_file(args.file);
  }

  Automaton a = build_ov_dfa(inst).automaton;
  if (args.binary) a = to_binary_alphabet(a);

  std::ostream& info = args.out.empty() ? err : out;
  if (args.solve) {
    if (auto pair = ov_bruteforce(inst)) {
      info << "orthogonal " << pair->first << ' ' << pair->second << '\n';
    } else {
      info << "no orthogonal pair\n";
    }
  }
  if (args.out.empty()) {
    out << serialize_automaton(a);
  } else {
    write_automaton_file(a, args.out);
  }
  return 0;
}

int run_bench_cmd(const BenchArgs& args, std::ostream& out) {
  BenchConfig config;
  if (!args.sizes.empty()) config.sizes = args.sizes;
  if (!args.seeds.empty()) config.seeds = args.seeds;
  config.edge_factor = args.edge_factor;
  config.sigma = args.sigma;
  auto rows = run_bench(config);
  if (args.csv.empty()) {
    write_bench_csv(out, rows);
  } else {
    std::ofstream f(args.csv);
    if (!f) throw Error("cannot write '" + args.csv + "'");
    write_bench_csv(f, rows);
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether the language of a DFA or regular expression is Wheeler"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide Wheelerness of a language");
  auto* dfa_opt = check_cmd->add_option("--dfa", check.dfa, "Automaton text file");
  auto* regex_opt = check_cmd->add_option("--regex", check.regex, "Regular expression");
  dfa_opt->excludes(regex_opt);
  check_cmd->add_option("--json", check.json, "Write the full report as JSON");
  check_cmd->add_flag("--quiet", check.quiet, "Print only the verdict");

  GenOvArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-ov", "Build the orthogonal-vectors hardness DFA");
  auto* random_opt = gen_cmd->add_option("--random", gen.random, "N d seed")->expected(3);
  auto* file_opt = gen_cmd->add_option("--file", gen.file, "OV instance file");
  random_opt->excludes(file_opt);
  gen_cmd->add_option("--force", gen.force, "yes or no")
      ->check(CLI::IsMember({"yes", "no", "any"}))
      ->needs(random_opt);
  gen_cmd->add_flag("--binary-alphabet", gen.binary, "Rewrite over {0,1}");
  gen_cmd->add_flag("--solve", gen.solve, "Print the brute-force OV verdict");
  gen_cmd->add_option("--out", gen.out, "Output automaton file (default: stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the recognizer on random DFAs");
  bench_cmd->add_option("--sizes", bench.sizes, "State counts")->delimiter(',');
  bench_cmd->add_option("--edge-factor", bench.edge_factor, "Transitions per state");
  bench_cmd->add_option("--sigma", bench.sigma, "Alphabet size");
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds")->delimiter(',');
  bench_cmd->add_option("--csv", bench.csv, "Output CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (check_cmd->parsed()) {
      if (check.dfa.empty() == check.regex.empty()) {
        err << "error: check needs exactly one of --dfa or --regex\n";
        return kUsageError;
      }
      return run_check(check, out, err);
    }
    if (gen_cmd->parsed()) {
      if (gen.random.empty() == gen.file.empty()) {
        err << "error: gen-ov needs exactly one of --random or --file\n";
        return kUsageError;
      }
      return run_gen_ov(gen, out, err);
    }
    return run_bench_cmd(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace wheeler
