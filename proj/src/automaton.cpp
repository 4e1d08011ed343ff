#include "wheeler/automaton.hpp"

#include <algorithm>
#include <cctype>

namespace wheeler {

Alphabet::Alphabet() { index_.fill(-1); }

Alphabet::Alphabet(std::string_view symbols) : Alphabet() {
  if (symbols.size() > 255) {
    throw Error("alphabet too large: at most 255 symbols are supported");
  }
  for (char c : symbols) {
    auto uc = static_cast<unsigned char>(c);
    if (!std::isgraph(uc)) {
      throw Error("alphabet symbols must be printable non-space characters");
    }
    if (index_[uc] >= 0) {
      throw Error(std::string("duplicate alphabet symbol '") + c + "'");
    }
    index_[uc] = static_cast<std::int16_t>(symbols_.size());
    symbols_.push_back(c);
  }
}

std::optional<Symbol> Alphabet::index_of(char c) const {
  auto idx = index_[static_cast<unsigned char>(c)];
  if (idx < 0) return std::nullopt;
  return static_cast<Symbol>(idx);
}

Automaton::Automaton(Alphabet alphabet, StateId num_states, StateId source,
                     std::vector<StateId> finals, std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      source_(num_states == 0 ? 0 : source),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
  if (num_states_ > 0 && source_ >= num_states_) {
    throw Error("source state " + std::to_string(source_) + " out of range");
  }
  final_flag_.assign(num_states_, 0);
  for (StateId f : finals_) {
    if (f >= num_states_) throw Error("final state " + std::to_string(f) + " out of range");
    if (final_flag_[f]) throw Error("duplicate final state " + std::to_string(f));
    final_flag_[f] = 1;
  }
  std::sort(finals_.begin(), finals_.end());

  for (const auto& t : transitions_) {
    if (t.from >= num_states_ || t.to >= num_states_) {
      throw Error("transition (" + std::to_string(t.from) + ", " + std::to_string(t.to) +
                  ") references a state out of range");
    }
    if (t.symbol >= alphabet_.size()) throw Error("transition symbol out of range");
  }
  std::sort(transitions_.begin(), transitions_.end());
  if (std::adjacent_find(transitions_.begin(), transitions_.end()) != transitions_.end()) {
    throw Error("duplicate transition");
  }

  out_offset_.assign(static_cast<std::size_t>(num_states_) + 1, 0);
  for (const auto& t : transitions_) ++out_offset_[t.from + 1];
  for (std::size_t u = 0; u < num_states_; ++u) out_offset_[u + 1] += out_offset_[u];

  deterministic_ = true;
  for (std::size_t i = 1; i < transitions_.size(); ++i) {
    if (transitions_[i].from == transitions_[i - 1].from &&
        transitions_[i].symbol == transitions_[i - 1].symbol) {
      deterministic_ = false;
      break;
    }
  }
  if (deterministic_) {
    delta_.assign(static_cast<std::size_t>(num_states_) * alphabet_.size(), kNoState);
    for (const auto& t : transitions_) {
      delta_[static_cast<std::size_t>(t.from) * alphabet_.size() + t.symbol] = t.to;
    }
  }
}

StateId Automaton::run(std::span<const Symbol> word) const {
  if (empty()) return kNoState;
  StateId u = source_;
  for (Symbol c : word) {
    u = next(u, c);
    if (u == kNoState) break;
  }
  return u;
}

bool Automaton::accepts(std::span<const Symbol> word) const {
  StateId u = run(word);
  return u != kNoState && is_final(u);
}

bool Automaton::operator==(const Automaton& other) const {
  return alphabet_ == other.alphabet_ && num_states_ == other.num_states_ &&
         source_ == other.source_ && finals_ == other.finals_ &&
         transitions_ == other.transitions_;
}

std::vector<Symbol> encode(const Alphabet& alphabet, std::string_view text) {
  std::vector<Symbol> word;
  word.reserve(text.size());
  for (char c : text) {
    auto s = alphabet.index_of(c);
    if (!s) throw Error(std::string("symbol '") + c + "' not in alphabet");
    word.push_back(*s);
  }
  return word;
}

std::string decode(const Alphabet& alphabet, std::span<const Symbol> word) {
  std::string text;
  text.reserve(word.size());
  for (Symbol s : word) text.push_back(alphabet.symbol(s));
  return text;
}

TrimResult trim(const Automaton& a) {
  const StateId n = a.num_states();
  TrimResult result;
  result.report.state_map.assign(n, std::nullopt);
  if (n == 0) {
    result.automaton = Automaton(a.alphabet(), 0, 0, {}, {});
    return result;
  }

  std::vector<std::uint8_t> reachable(n, 0), useful(n, 0);
  std::vector<StateId> stack{a.source()};
  reachable[a.source()] = 1;
  while (!stack.empty()) {
    StateId u = stack.back();
    stack.pop_back();
    for (const auto& t : a.out(u)) {
      if (!reachable[t.to]) {
        reachable[t.to] = 1;
        stack.push_back(t.to);
      }
    }
  }

  std::vector<std::size_t> in_offset(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& t : a.transitions()) ++in_offset[t.to + 1];
  for (std::size_t u = 0; u < n; ++u) in_offset[u + 1] += in_offset[u];
  std::vector<StateId> preds(a.num_transitions());
  {
    auto fill = in_offset;
    for (const auto& t : a.transitions()) preds[fill[t.to]++] = t.from;
  }
  for (StateId f : a.finals()) {
    useful[f] = 1;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    StateId u = stack.back();
    stack.pop_back();
    for (std::size_t k = in_offset[u]; k < in_offset[u + 1]; ++k) {
      if (!useful[preds[k]]) {
        useful[preds[k]] = 1;
        stack.push_back(preds[k]);
      }
    }
  }

  auto& report = result.report;
  for (StateId u = 0; u < n; ++u) {
    if (!reachable[u]) {
      ++report.dropped_unreachable;
    } else if (!useful[u]) {
      ++report.dropped_dead;
    } else {
      report.state_map[u] = report.kept++;
    }
  }
  if (!report.state_map[a.source()]) {
    // Empty language: nothing survives, not even the source.
    for (auto& slot : report.state_map) slot.reset();
    report.dropped_dead += report.kept;
    report.kept = 0;
    result.automaton = Automaton(a.alphabet(), 0, 0, {}, {});
    return result;
  }

  std::vector<StateId> finals;
  for (StateId f : a.finals()) {
    if (report.state_map[f]) finals.push_back(*report.state_map[f]);
  }
  std::vector<Transition> transitions;
  for (const auto& t : a.transitions()) {
    if (report.state_map[t.from] && report.state_map[t.to]) {
      transitions.push_back({*report.state_map[t.from], t.symbol, *report.state_map[t.to]});
    }
  }
  result.automaton = Automaton(a.alphabet(), report.kept, *report.state_map[a.source()],
                               std::move(finals), std::move(transitions));
  return result;
}

Automaton reverse(const Automaton& a) {
  std::vector<Transition> transitions;
  transitions.reserve(a.num_transitions());
  for (const auto& t : a.transitions()) transitions.push_back({t.to, t.symbol, t.from});
  return Automaton(a.alphabet(), a.num_states(), a.source(), a.finals(), std::move(transitions));
}

}  // namespace wheeler
