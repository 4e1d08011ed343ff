#include "wheeler/recognizer.hpp"

#include <chrono>

#include "wheeler/minimize.hpp"

namespace wheeler {
namespace {

class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

Recognition recognize_full(const Automaton& a, InputMode mode) {
  if (!a.deterministic()) throw Error("recognize: input automaton is not deterministic");
  Recognition out;
  Report& r = out.report;
  r.input_mode = mode;
  r.n = a.num_states();
  r.m = a.num_transitions();

  Stopwatch clock;
  auto trimmed = trim(a).automaton;
  r.timings.trim_ms = clock.lap_ms();
  out.minimum = minimize(trimmed).automaton;
  r.timings.minimize_ms = clock.lap_ms();
  r.n_min = out.minimum.num_states();
  r.m_min = out.minimum.num_transitions();
  if (out.minimum.empty()) return out;  // empty language: trivially Wheeler

  out.ranks = compute_rank_table(out.minimum);
  r.rank_rounds = out.ranks.rounds();
  r.width_estimate = width_estimate(out.ranks);
  r.timings.rank_ms = clock.lap_ms();

  PrunedSquare square = build_pruned_square(out.minimum, out.ranks);
  r.square_states = square.num_states();
  r.square_transitions = square.num_transitions();
  r.timings.square_ms = clock.lap_ms();

  r.wheeler = is_acyclic(square);
  r.timings.acyclic_ms = clock.lap_ms();
  if (!r.wheeler) {
    r.witness = extract_witness(square);
    r.timings.witness_ms = clock.lap_ms();
  }
  return out;
}

Report recognize(const Automaton& a, InputMode mode) { return recognize_full(a, mode).report; }

bool recognize_via_full_square(const Automaton& a) {
  auto minimum = minimize(a).automaton;
  if (minimum.empty()) return true;
  auto ranks = compute_rank_table(minimum, {.prune_edges = false});
  return is_acyclic(build_full_square(minimum, ranks));
}

nlohmann::json report_to_json(const Report& r, const Alphabet& alphabet) {
  nlohmann::json j;
  j["wheeler"] = r.wheeler;
  j["input_mode"] = r.input_mode == InputMode::Dfa ? "dfa" : "regex";
  j["n"] = r.n;
  j["m"] = r.m;
  j["n_min"] = r.n_min;
  j["m_min"] = r.m_min;
  j["width_estimate"] = r.width_estimate;
  j["square_states"] = r.square_states;
  j["square_transitions"] = r.square_transitions;
  if (r.witness) {
    nlohmann::json cycle = nlohmann::json::array();
    for (const auto& p : r.witness->cycle) cycle.push_back({p.first, p.second});
    j["witness"] = {{"cycle", cycle}, {"labels", decode(alphabet, r.witness->labels)}};
  } else {
    j["witness"] = nullptr;
  }
  j["timings_ms"] = {{"trim", r.timings.trim_ms},       {"minimize", r.timings.minimize_ms},
                     {"rank", r.timings.rank_ms},       {"square", r.timings.square_ms},
                     {"acyclic", r.timings.acyclic_ms}, {"witness", r.timings.witness_ms},
                     {"total", r.timings.total_ms()}};
  return j;
}

}  // namespace wheeler
