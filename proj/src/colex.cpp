#include "wheeler/colex.hpp"

#include <algorithm>
#include <unordered_map>

namespace wheeler {

int EventuallyPeriodicString::from_end(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[preperiod.size() - 1 - i];
  if (period.empty()) return -1;
  std::size_t j = (i - preperiod.size()) % period.size();
  return period[period.size() - 1 - j];
}

std::string EventuallyPeriodicString::to_string(const Alphabet& alphabet) const {
  std::string out;
  if (!period.empty()) out = "(" + decode(alphabet, period) + ")^w";
  out += decode(alphabet, preperiod);
  return out.empty() ? std::string("eps") : out;
}

std::strong_ordering compare_eps(const EventuallyPeriodicString& x,
                                 const EventuallyPeriodicString& y) {
  // Past this depth two eventually periodic strings that still agree are
  // equal (Fine and Wilf).
  const std::size_t depth = x.preperiod.size() + y.preperiod.size() + x.period.size() +
                            y.period.size() + std::max(x.period.size(), y.period.size());
  for (std::size_t i = 0; i <= depth; ++i) {
    int cx = x.from_end(i);
    int cy = y.from_end(i);
    if (cx != cy) return cx <=> cy;
    if (cx < 0) return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

namespace {

Automaton prune_edges(const Automaton& a, bool keep_max) {
  const StateId n = a.num_states();
  std::vector<int> best(n, -1);
  for (const auto& t : a.transitions()) {
    int c = t.symbol;
    int& b = best[t.to];
    if (b < 0 || (keep_max ? c > b : c < b)) b = c;
  }
  std::vector<Transition> kept;
  for (const auto& t : a.transitions()) {
    if (t.symbol == best[t.to]) kept.push_back(t);
  }
  return Automaton(a.alphabet(), n, a.source(), a.finals(), std::move(kept));
}

}  // namespace

Automaton prune_min_edges(const Automaton& a) { return prune_edges(a, false); }
Automaton prune_max_edges(const Automaton& a) { return prune_edges(a, true); }

struct RankTableBuilder {
  static RankTable build(const Automaton& a, const RankOptions& options) {
    const StateId n = a.num_states();
    const std::size_t elements = 2 * static_cast<std::size_t>(n);
    RankTable table;
    if (n == 0) return table;

    // Candidate predecessors per element, CSR, sorted by predecessor state.
    struct Candidate {
      StateId from;
      Symbol symbol;
    };
    std::vector<std::size_t> offset(elements + 1, 0);
    std::vector<Candidate> candidates;
    {
      Automaton inf_src = options.prune_edges ? prune_min_edges(a) : a;
      Automaton sup_src = options.prune_edges ? prune_max_edges(a) : a;
      for (const auto& t : inf_src.transitions()) ++offset[RankTable::element(t.to, Bound::Inf) + 1];
      for (const auto& t : sup_src.transitions()) ++offset[RankTable::element(t.to, Bound::Sup) + 1];
      for (std::size_t e = 0; e < elements; ++e) offset[e + 1] += offset[e];
      candidates.resize(offset[elements]);
      auto fill = offset;
      // transitions() is sorted by source state, so each list comes out sorted
      for (const auto& t : inf_src.transitions()) {
        candidates[fill[RankTable::element(t.to, Bound::Inf)]++] = {t.from, t.symbol};
      }
      for (const auto& t : sup_src.transitions()) {
        candidates[fill[RankTable::element(t.to, Bound::Sup)]++] = {t.from, t.symbol};
      }
    }

    constexpr std::uint64_t kEpsilonKey = 0;
    auto edge_key = [](Symbol c, std::uint32_t prev_rank) {
      return ((std::uint64_t{c} + 1) << 32) | prev_rank;
    };

    std::vector<std::uint32_t> prev(elements, 1), next(elements, 0);
    std::vector<std::uint64_t> key(elements);
    std::vector<RankTable::Choice> choice(elements);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> order(elements);
    const std::size_t cap = 8 * static_cast<std::size_t>(n) + 8;

    std::size_t rounds = 0;
    std::uint32_t distinct = 1;
    while (true) {
      if (++rounds > cap) {
        throw Error("compute_rank_table: ranks did not settle within " + std::to_string(cap) +
                    " rounds");
      }
      for (std::size_t e = 0; e < elements; ++e) {
        const StateId u = static_cast<StateId>(e / 2);
        const bool want_max = (e & 1) != 0;
        bool have = false;
        std::uint64_t best = 0;
        RankTable::Choice pick;
        if (u == a.source()) {
          have = true;
          best = kEpsilonKey;
        }
        for (std::size_t i = offset[e]; i < offset[e + 1]; ++i) {
          const auto& cand = candidates[i];
          std::uint64_t k = edge_key(cand.symbol, prev[2 * static_cast<std::size_t>(cand.from) + (e & 1)]);
          if (!have || (want_max ? k > best : k < best)) {
            have = true;
            best = k;
            pick = {cand.from, cand.symbol};
          }
        }
        if (!have) {
          throw Error("compute_rank_table: state " + std::to_string(u) +
                      " is unreachable; trim the automaton first");
        }
        key[e] = best;
        choice[e] = pick;
      }

      for (std::size_t e = 0; e < elements; ++e) order[e] = {key[e], static_cast<std::uint32_t>(e)};
      std::sort(order.begin(), order.end());
      std::uint32_t rank = 0;
      std::uint32_t last_prev = 0;
      for (std::size_t i = 0; i < elements; ++i) {
        if (i == 0 || order[i].first != order[i - 1].first) ++rank;
        const std::uint32_t e = order[i].second;
        // Round k must refine round k-1 without reordering it.
        if (prev[e] < last_prev) {
          throw Error("compute_rank_table: refinement is not monotone (internal error)");
        }
        last_prev = prev[e];
        next[e] = rank;
      }
      distinct = rank;
      if (next == prev) break;
      prev.swap(next);
    }

    table.rank_ = std::move(prev);
    table.choice_ = std::move(choice);
    table.rounds_ = rounds;
    table.distinct_ = distinct;
    return table;
  }
};

RankTable compute_rank_table(const Automaton& a, RankOptions options) {
  if (!a.deterministic()) throw Error("compute_rank_table: automaton is not deterministic");
  return RankTableBuilder::build(a, options);
}

EventuallyPeriodicString extract_infsup_string(const RankTable& table, StateId u, Bound which) {
  std::vector<Symbol> symbols;  // last character first
  std::unordered_map<StateId, std::size_t> seen_at;
  StateId v = u;
  while (true) {
    const auto& ch = table.choice(v, which);
    if (ch.from == kNoState) {
      return {std::vector<Symbol>(symbols.rbegin(), symbols.rend()), {}};
    }
    seen_at.emplace(v, symbols.size());
    symbols.push_back(ch.symbol);
    v = ch.from;
    if (auto it = seen_at.find(v); it != seen_at.end()) {
      const std::size_t j = it->second;
      EventuallyPeriodicString s;
      s.preperiod.assign(symbols.rend() - static_cast<std::ptrdiff_t>(j), symbols.rend());
      s.period.assign(symbols.rbegin(), symbols.rend() - static_cast<std::ptrdiff_t>(j));
      return s;
    }
  }
}

bool intervals_intersect(const RankTable& table, StateId u, StateId v) {
  if (table.singleton(u) || table.singleton(v)) return false;
  return table.inf_rank(v) < table.sup_rank(u) && table.inf_rank(u) < table.sup_rank(v);
}

std::size_t width_estimate(const RankTable& table) {
  // Gap g sits between ranks g and g+1; interval (x, y) covers gaps x..y-1.
  std::vector<std::int64_t> delta(2 * static_cast<std::size_t>(table.num_states()) + 2, 0);
  for (StateId u = 0; u < table.num_states(); ++u) {
    if (table.singleton(u)) continue;
    ++delta[table.inf_rank(u)];
    --delta[table.sup_rank(u)];
  }
  std::int64_t depth = 0, best = 1;
  for (auto d : delta) {
    depth += d;
    best = std::max(best, depth);
  }
  return static_cast<std::size_t>(best);
}

}  // namespace wheeler
