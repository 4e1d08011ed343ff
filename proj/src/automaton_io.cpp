#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "wheeler/automaton.hpp"

namespace wheeler {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens.front().front() != '#') {
      lines.push_back({number, std::move(tokens)});
    }
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(const Line& line, std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line.number, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

StateId parse_state(const Line& line, std::string_view token, std::uint64_t num_states) {
  auto id = parse_uint(line, token);
  if (id >= num_states) {
    fail(line.number, "state id " + std::string(token) + " out of range (states " +
                          std::to_string(num_states) + ")");
  }
  return static_cast<StateId>(id);
}

const Line& expect_keyword(const std::vector<Line>& lines, std::size_t index,
                           std::string_view keyword, std::size_t last_line) {
  if (index >= lines.size()) {
    fail(last_line + 1, "unexpected end of input, expected '" + std::string(keyword) + "'");
  }
  const Line& line = lines[index];
  if (line.tokens.front() != keyword) {
    fail(line.number, "expected '" + std::string(keyword) + "', got '" +
                          std::string(line.tokens.front()) + "'");
  }
  return line;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("line 1: empty automaton document");

  const Line& header = lines[0];
  if (header.tokens.size() != 1 || (header.tokens[0] != "dfa" && header.tokens[0] != "nfa")) {
    fail(header.number, "expected 'dfa' or 'nfa'");
  }
  const bool declared_dfa = header.tokens[0] == "dfa";
  std::size_t last = header.number;

  const Line& alpha_line = expect_keyword(lines, 1, "alphabet", last);
  std::string symbols;
  for (std::size_t k = 1; k < alpha_line.tokens.size(); ++k) {
    if (alpha_line.tokens[k].size() != 1) {
      fail(alpha_line.number, "alphabet symbols must be single characters, got '" +
                                  std::string(alpha_line.tokens[k]) + "'");
    }
    symbols.push_back(alpha_line.tokens[k][0]);
  }
  Alphabet alphabet;
  try {
    alphabet = Alphabet(symbols);
  } catch (const Error& e) {
    fail(alpha_line.number, e.what());
  }
  last = alpha_line.number;

  const Line& states_line = expect_keyword(lines, 2, "states", last);
  if (states_line.tokens.size() != 2) fail(states_line.number, "expected 'states <n>'");
  auto num_states = parse_uint(states_line, states_line.tokens[1]);
  if (num_states >= kNoState) fail(states_line.number, "too many states");
  last = states_line.number;

  const Line& source_line = expect_keyword(lines, 3, "source", last);
  if (source_line.tokens.size() != 2) fail(source_line.number, "expected 'source <id>'");
  StateId source = 0;
  if (num_states == 0) {
    if (parse_uint(source_line, source_line.tokens[1]) != 0) {
      fail(source_line.number, "source must be 0 for an empty automaton");
    }
  } else {
    source = parse_state(source_line, source_line.tokens[1], num_states);
  }
  last = source_line.number;

  const Line& finals_line = expect_keyword(lines, 4, "finals", last);
  std::vector<StateId> finals;
  std::vector<std::uint8_t> is_final(num_states, 0);
  for (std::size_t k = 1; k < finals_line.tokens.size(); ++k) {
    StateId f = parse_state(finals_line, finals_line.tokens[k], num_states);
    if (is_final[f]) fail(finals_line.number, "duplicate final state " + std::to_string(f));
    is_final[f] = 1;
    finals.push_back(f);
  }
  last = finals_line.number;

  const Line& trans_line = expect_keyword(lines, 5, "transitions", last);
  if (trans_line.tokens.size() != 2) fail(trans_line.number, "expected 'transitions <m>'");
  auto num_transitions = parse_uint(trans_line, trans_line.tokens[1]);
  last = trans_line.number;

  if (lines.size() < 6 + num_transitions) {
    fail(lines.empty() ? last + 1 : lines.back().number + 1,
         "expected " + std::to_string(num_transitions) + " transition lines, found " +
             std::to_string(lines.size() - 6));
  }
  if (lines.size() > 6 + num_transitions) {
    fail(lines[6 + num_transitions].number, "unexpected content after the transition list");
  }

  std::vector<Transition> transitions;
  transitions.reserve(num_transitions);
  std::vector<StateId> seen;  // (from, symbol) -> target, when declared dfa
  if (declared_dfa) seen.assign(num_states * alphabet.size(), kNoState);
  std::set<Transition> seen_exact;
  for (std::size_t k = 0; k < num_transitions; ++k) {
    const Line& line = lines[6 + k];
    if (line.tokens.size() != 3) fail(line.number, "expected '<from> <symbol> <to>'");
    StateId from = parse_state(line, line.tokens[0], num_states);
    if (line.tokens[1].size() != 1) {
      fail(line.number, "symbol must be a single character, got '" + std::string(line.tokens[1]) +
                            "'");
    }
    auto symbol = alphabet.index_of(line.tokens[1][0]);
    if (!symbol) fail(line.number, "unknown symbol '" + std::string(line.tokens[1]) + "'");
    StateId to = parse_state(line, line.tokens[2], num_states);
    if (declared_dfa) {
      auto& slot = seen[static_cast<std::size_t>(from) * alphabet.size() + *symbol];
      if (slot != kNoState) {
        fail(line.number, "duplicate transition from state " + std::to_string(from) +
                              " on symbol '" + std::string(line.tokens[1]) + "'");
      }
      slot = to;
    } else if (!seen_exact.insert({from, *symbol, to}).second) {
      fail(line.number, "duplicate transition");
    }
    transitions.push_back({from, *symbol, to});
  }
  return Automaton(std::move(alphabet), static_cast<StateId>(num_states), source,
                   std::move(finals), std::move(transitions));
}

std::string serialize_automaton(const Automaton& a) {
  std::ostringstream out;
  out << (a.deterministic() ? "dfa" : "nfa") << '\n';
  out << "alphabet";
  for (char c : a.alphabet().symbols()) out << ' ' << c;
  out << '\n';
  out << "states " << a.num_states() << '\n';
  out << "source " << a.source() << '\n';
  out << "finals";
  for (StateId f : a.finals()) out << ' ' << f;
  out << '\n';
  out << "transitions " << a.num_transitions() << '\n';
  for (const auto& t : a.transitions()) {
    out << t.from << ' ' << a.alphabet().symbol(t.symbol) << ' ' << t.to << '\n';
  }
  return out.str();
}

Automaton read_automaton_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_automaton(buffer.str());
}

void write_automaton_file(const Automaton& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_automaton(a);
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace wheeler
