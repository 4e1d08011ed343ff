#include "wheeler/ov.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace wheeler {
namespace {

constexpr Symbol kZero = 0;
constexpr Symbol kOne = 1;
constexpr Symbol kHash = 2;

bool orthogonal(const BitVector& a, const BitVector& b) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] && b[r]) return false;
  }
  return true;
}

BitVector random_vector(std::size_t d, std::mt19937_64& rng) {
  BitVector v(d);
  for (auto& bit : v) bit = static_cast<std::uint8_t>(rng() & 1);
  return v;
}

BitVector vector_of(std::uint64_t value, std::size_t d) {
  BitVector v(d);
  for (std::size_t r = 0; r < d; ++r) v[r] = (value >> (d - 1 - r)) & 1;
  return v;
}

std::vector<BitVector> distinct_vectors(std::size_t N, std::size_t d, std::mt19937_64& rng) {
  if (d < 20 && 2 * N > (std::size_t{1} << d)) {
    std::vector<std::uint64_t> all(std::size_t{1} << d);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < N; ++i) out.push_back(vector_of(all[i], d));
    return out;
  }
  std::set<BitVector> seen;
  std::vector<BitVector> out;
  while (out.size() < N) {
    auto v = random_vector(d, rng);
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

BitVector parse_bits(const std::string& line, std::size_t d, std::size_t line_no) {
  if (line.size() != d) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(d) +
                     " bits, got '" + line + "'");
  }
  BitVector v(d);
  for (std::size_t r = 0; r < d; ++r) {
    if (line[r] != '0' && line[r] != '1') {
      throw ParseError("line " + std::to_string(line_no) + ": not a 0/1 string: '" + line + "'");
    }
    v[r] = line[r] == '1';
  }
  return v;
}

}  // namespace

std::size_t OvInstance::ell() const { return N == 0 ? 0 : std::countr_zero(N); }

void OvInstance::validate() const {
  if (N == 0 || !std::has_single_bit(N)) throw Error("OV: N must be a power of two");
  if (d == 0) throw Error("OV: d must be at least 1");
  if (A.size() != N || B.size() != N) throw Error("OV: A and B must each hold N vectors");
  for (const auto* family : {&A, &B}) {
    for (const auto& v : *family) {
      if (v.size() != d) throw Error("OV: vector of wrong dimension");
      for (auto bit : v) {
        if (bit > 1) throw Error("OV: vector entries must be 0 or 1");
      }
    }
  }
  std::set<BitVector> distinct(A.begin(), A.end());
  if (distinct.size() != A.size()) throw Error("OV: vectors of A must be distinct");
}

OvInstance parse_ov_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    auto first = line.find_first_not_of(' ');
    if (first == std::string::npos || line[first] == '#') continue;
    lines.emplace_back(no, line.substr(first));
  }
  if (lines.empty()) throw ParseError("OV: empty input");

  OvInstance inst;
  {
    std::istringstream header(lines[0].second);
    std::string extra;
    if (!(header >> inst.N >> inst.d) || (header >> extra)) {
      throw ParseError("line " + std::to_string(lines[0].first) + ": expected 'N d'");
    }
  }
  if (lines.size() != 1 + 2 * inst.N) {
    throw ParseError("OV: expected " + std::to_string(2 * inst.N) + " vector lines, got " +
                     std::to_string(lines.size() - 1));
  }
  for (std::size_t k = 0; k < 2 * inst.N; ++k) {
    auto& target = k < inst.N ? inst.A : inst.B;
    target.push_back(parse_bits(lines[1 + k].second, inst.d, lines[1 + k].first));
  }
  inst.validate();
  return inst;
}

OvInstance read_ov_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ov_instance(buffer.str());
}

std::string serialize_ov_instance(const OvInstance& inst) {
  std::string out = std::to_string(inst.N) + " " + std::to_string(inst.d) + "\n";
  for (const auto* family : {&inst.A, &inst.B}) {
    for (const auto& v : *family) {
      for (auto bit : v) out += bit ? '1' : '0';
      out += '\n';
    }
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> ov_bruteforce(const OvInstance& inst) {
  for (std::size_t r = 0; r < inst.A.size(); ++r) {
    for (std::size_t s = 0; s < inst.B.size(); ++s) {
      if (orthogonal(inst.A[r], inst.B[s])) return std::pair{r + 1, s + 1};
    }
  }
  return std::nullopt;
}

OvInstance random_ov_instance(std::size_t N, std::size_t d, std::uint64_t seed, OvForce force) {
  if (N == 0 || !std::has_single_bit(N)) throw Error("OV: N must be a power of two");
  if (d == 0) throw Error("OV: d must be at least 1");
  if (d < 64 && N > (std::uint64_t{1} << d)) throw Error("OV: N > 2^d, A cannot be distinct");
  if (force == OvForce::No && d < 64 && N == (std::uint64_t{1} << d)) {
    throw Error("OV: N = 2^d forces the zero vector into A, no NO instance exists");
  }

  std::mt19937_64 rng(seed);
  OvInstance inst;
  inst.N = N;
  inst.d = d;

  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    inst.A = distinct_vectors(N, d, rng);
    inst.B.clear();
    bool ok = true;
    for (std::size_t s = 0; s < N && ok; ++s) {
      BitVector b = random_vector(d, rng);
      if (force == OvForce::No) {
        int tries = 0;
        auto hits = [&](const BitVector& v) {
          return std::any_of(inst.A.begin(), inst.A.end(),
                             [&](const BitVector& a) { return orthogonal(a, v); });
        };
        while (hits(b) && ++tries < kAttempts) b = random_vector(d, rng);
        ok = !hits(b);
      }
      inst.B.push_back(std::move(b));
    }
    if (!ok) continue;
    if (force == OvForce::Yes && !ov_bruteforce(inst)) {
      std::size_t r = rng() % N;
      std::size_t s = rng() % N;
      for (std::size_t k = 0; k < d; ++k) {
        if (inst.A[r][k]) inst.B[s][k] = 0;
      }
    }
    return inst;
  }
  throw Error("OV: could not sample a NO instance within the retry budget");
}

OvDfaLayout::OvDfaLayout(std::size_t N, std::size_t d)
    : N_(N), d_(d), ell_(static_cast<std::size_t>(std::countr_zero(N))) {
  conn_base_ = tree_size();
  cycle_base_ = conn_base_ + static_cast<StateId>(5 * N_);
  in_base_ = cycle_base_ + static_cast<StateId>(2 * N_ * cycle_length());
}

StateId OvDfaLayout::out_node(std::size_t k, std::uint64_t v) const {
  return static_cast<StateId>((std::uint64_t{1} << k) - 1 + v);
}

StateId OvDfaLayout::in_node(std::size_t k, std::uint64_t v) const {
  return in_base_ + static_cast<StateId>((std::uint64_t{1} << k) - 1 + v);
}

StateId OvDfaLayout::cycle_a(std::size_t i, std::size_t pos) const {
  return cycle_base_ + static_cast<StateId>((i - 1) * cycle_length() + pos);
}

StateId OvDfaLayout::cycle_b(std::size_t j, std::size_t pos) const {
  return cycle_base_ + static_cast<StateId>((N_ + j - 1) * cycle_length() + pos);
}

OvDfaLayout::Node OvDfaLayout::node(StateId u) const {
  if (u < conn_base_) return {Region::OutTree, 0, u};
  if (u < cycle_base_) {
    std::uint32_t off = u - conn_base_;
    return {Region::Connector, static_cast<std::uint32_t>(off % N_ + 1), off};
  }
  if (u < in_base_) {
    std::uint32_t off = u - cycle_base_;
    std::uint32_t c = static_cast<std::uint32_t>(off / cycle_length());
    std::uint32_t pos = static_cast<std::uint32_t>(off % cycle_length());
    if (c < N_) return {Region::CycleA, c + 1, pos};
    return {Region::CycleB, static_cast<std::uint32_t>(c - N_ + 1), pos};
  }
  if (u < num_states()) return {Region::InTree, 0, u - in_base_};
  throw Error("OV layout: state id out of range");
}

std::vector<std::uint8_t> OvDfaLayout::rho(std::size_t i) const {
  return vector_of(i - 1, ell_);
}

OvDfa build_ov_dfa(const OvInstance& inst) {
  inst.validate();
  OvDfaLayout L(inst.N, inst.d);
  const std::size_t N = inst.N;
  const std::size_t d = inst.d;
  const std::size_t ell = L.ell();
  std::vector<Transition> edges;
  auto add = [&](StateId from, Symbol c, StateId to) { edges.push_back({from, c, to}); };

  for (std::size_t k = 0; k <= ell; ++k) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      add(L.out_node(k, v), kZero, L.out_node(k + 1, 2 * v));
      add(L.out_node(k, v), kOne, L.out_node(k + 1, 2 * v + 1));
      std::uint64_t half = std::uint64_t{1} << k;
      // in-tree: node (k+1, w) reads its leading bit and moves to (k, rest)
      add(L.in_node(k + 1, v), kZero, L.in_node(k, v));
      add(L.in_node(k + 1, half + v), kOne, L.in_node(k, v));
    }
  }

  for (std::size_t i = 1; i <= N; ++i) {
    add(L.x(i), kZero, L.x2(i));
    add(L.x2(i), kZero, L.a_hat_in(i));
    add(L.x(i), kOne, L.x1(i));
    add(L.x1(i), kOne, L.a_hat_in(i));
    add(L.a_hat_in(i), kZero, L.cycle_a(i, 0));
    add(L.y(i), kZero, L.y1(i));
    add(L.y1(i), kOne, L.b_hat_in(i));
    add(L.b_hat_in(i), kZero, L.cycle_b(i, 0));
  }

  for (std::size_t i = 1; i <= N; ++i) {
    const auto& a = inst.A[i - 1];
    for (std::size_t r = 1; r <= d; ++r) add(L.cycle_a(i, r - 1), a[r - 1], L.cycle_a(i, r));
    for (std::size_t k = 1; k <= ell; ++k) {
      add(L.cycle_a(i, d + k - 1), kZero, L.cycle_a(i, d + k));
      add(L.cycle_a(i, d + k - 1), kOne, L.cycle_a(i, d + k));
    }
    add(L.cycle_a(i, d + ell), kHash, L.cycle_a(i, 0));
    add(L.cycle_a(i, d + ell), kZero, L.t(i));
  }

  for (std::size_t j = 1; j <= N; ++j) {
    const auto& b = inst.B[j - 1];
    for (std::size_t r = 1; r <= d; ++r) {
      add(L.cycle_b(j, r - 1), kZero, L.cycle_b(j, r));
      if (!b[r - 1]) add(L.cycle_b(j, r - 1), kOne, L.cycle_b(j, r));
    }
    auto code = L.rho(j);
    for (std::size_t k = 1; k <= ell; ++k) {
      add(L.cycle_b(j, d + k - 1), code[k - 1], L.cycle_b(j, d + k));
    }
    add(L.cycle_b(j, d + ell), kHash, L.cycle_b(j, 0));
    add(L.cycle_b(j, d + ell), kZero, L.z(j));
  }

  Automaton a(Alphabet("01#"), L.num_states(), L.source(), {L.sink()}, std::move(edges));
  return {std::move(a), L};
}

Automaton to_binary_alphabet(const Automaton& a) {
  const Alphabet& sigma = a.alphabet();
  std::vector<std::string> spelling(sigma.size());
  for (std::size_t c = 0; c < sigma.size(); ++c) {
    switch (sigma.symbol(static_cast<Symbol>(c))) {
      case '0': spelling[c] = "00"; break;
      case '1': spelling[c] = "11"; break;
      case '#': spelling[c] = "101"; break;
      default:
        throw Error(std::string("binary transform: symbol '") + sigma.symbol(static_cast<Symbol>(c)) +
                    "' is not one of 0, 1, #");
    }
  }

  StateId next = a.num_states();
  std::vector<Transition> edges;
  for (const auto& t : a.transitions()) {
    const std::string& path = spelling[t.symbol];
    StateId cur = t.from;
    for (std::size_t k = 0; k < path.size(); ++k) {
      StateId to = k + 1 == path.size() ? t.to : next++;
      edges.push_back({cur, static_cast<Symbol>(path[k] - '0'), to});
      cur = to;
    }
  }
  return Automaton(Alphabet("01"), next, a.source(), a.finals(), std::move(edges));
}

std::pair<std::size_t, std::size_t> decode_witness(const OvDfaLayout& layout, const Witness& w) {
  if (w.cycle.empty()) throw Error("decode_witness: empty witness");
  using Region = OvDfaLayout::Region;
  auto cycle_id = [&](StateId u) -> std::pair<Region, std::uint32_t> {
    auto n = layout.node(u);
    if (n.region != Region::CycleA && n.region != Region::CycleB) {
      throw Error("decode_witness: witness leaves the cycles");
    }
    return {n.region, n.index};
  };
  auto first = cycle_id(w.cycle.front().first);
  auto second = cycle_id(w.cycle.front().second);
  for (const auto& p : w.cycle) {
    if (cycle_id(p.first) != first || cycle_id(p.second) != second) {
      throw Error("decode_witness: witness spans more than one pair of cycles");
    }
  }
  if (first.first == second.first) {
    throw Error("decode_witness: witness pairs two cycles of the same family");
  }
  if (first.first == Region::CycleA) return {first.second, second.second};
  return {second.second, first.second};
}

}  // namespace wheeler
