#include "wheeler/square.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace wheeler {

std::optional<PrunedSquare::Index> PrunedSquare::index_of(StateId u, StateId v) const {
  if (u == v || u >= pos_.size() || v >= pos_.size()) return std::nullopt;
  const StateId pu = pos_[u], pv = pos_[v];
  if (pu == kNoState || pv == kNoState) return std::nullopt;
  const StateId i = std::min(pu, pv), j = std::max(pu, pv);
  if (j > reach_[i]) return std::nullopt;
  const Index upper = pair_offset_[i] + (j - i - 1);
  return 2 * upper + (pu > pv ? 1 : 0);
}

StatePair PrunedSquare::pair_at(Index index) const {
  const Index upper = index >> 1;
  auto it = std::upper_bound(pair_offset_.begin(), pair_offset_.end(), upper);
  const auto i = static_cast<std::size_t>(it - pair_offset_.begin()) - 1;
  const std::size_t j = i + 1 + (upper - pair_offset_[i]);
  if (index & 1) return {order_[j], order_[i]};
  return {order_[i], order_[j]};
}

SquareGraph PrunedSquare::materialize() const {
  SquareGraph g;
  g.states.reserve(num_states());
  g.transitions.reserve(num_transitions());
  for (Index x = 0; x < num_states(); ++x) {
    const StatePair from = pair_at(x);
    g.states.push_back(from);
    for_each_out(x, [&](Symbol c, Index to) { g.transitions.push_back({from, c, pair_at(to)}); });
  }
  std::sort(g.states.begin(), g.states.end());
  std::sort(g.transitions.begin(), g.transitions.end());
  return g;
}

PrunedSquare build_pruned_square(const Automaton& a, const RankTable& table) {
  if (!a.deterministic()) throw Error("build_pruned_square: automaton is not deterministic");
  const StateId n = a.num_states();
  PrunedSquare sq;

  sq.in_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& t : a.transitions()) ++sq.in_offset_[t.to + 1];
  for (std::size_t u = 0; u < n; ++u) sq.in_offset_[u + 1] += sq.in_offset_[u];
  sq.in_edges_.resize(a.num_transitions());
  {
    auto fill = sq.in_offset_;
    for (const auto& t : a.transitions()) sq.in_edges_[fill[t.to]++] = t;
  }

  // States sorted by inf rank; singletons never intersect anything.
  for (StateId u = 0; u < n; ++u) {
    if (!table.singleton(u)) sq.order_.push_back(u);
  }
  std::sort(sq.order_.begin(), sq.order_.end(), [&](StateId x, StateId y) {
    return std::pair(table.inf_rank(x), x) < std::pair(table.inf_rank(y), y);
  });
  const std::size_t count = sq.order_.size();
  sq.pos_.assign(n, kNoState);
  for (std::size_t i = 0; i < count; ++i) sq.pos_[sq.order_[i]] = static_cast<StateId>(i);

  // Pair-states: i = 0, j = 1; extend j while u_i and u_j intersect, then
  // move to i + 1 and restart at j = i + 2.
  sq.reach_.assign(count, 0);
  {
    std::size_t i = 0, j = 1;
    while (i < count) {
      if (j < count && intervals_intersect(table, sq.order_[i], sq.order_[j])) {
        ++j;
      } else {
        sq.reach_[i] = static_cast<std::uint32_t>(j - 1);
        ++i;
        j = i + 1;
      }
    }
  }
  sq.pair_offset_.assign(count + 1, 0);
  {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) {
      total += sq.reach_[i] - i;
      if (2 * total >= std::numeric_limits<PrunedSquare::Index>::max()) {
        throw ResourceError("pruned square has too many pair-states");
      }
      sq.pair_offset_[i + 1] = static_cast<PrunedSquare::Index>(total);
    }
  }
  const PrunedSquare::Index uppers = sq.pair_offset_[count];
  sq.offset_.assign(static_cast<std::size_t>(uppers) + 1, 0);

  // L_a: positions of states with an a-edge, in sorted order.
  const std::size_t k = a.alphabet().size();
  std::vector<std::vector<StateId>> lists(k);
  for (std::size_t i = 0; i < count; ++i) {
    for (const auto& t : a.out(sq.order_[i])) lists[t.symbol].push_back(static_cast<StateId>(i));
  }

  // Two passes over the same scan: count per source, then fill.
  for (int pass = 0; pass < 2; ++pass) {
    std::uint64_t emitted = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& list = lists[c];
      const auto symbol = static_cast<Symbol>(c);
      std::size_t i = 0, j = 1;
      while (i < list.size()) {
        const StateId pi = list[i];
        if (j < list.size() && list[j] <= sq.reach_[pi]) {
          // (L[i], L[j]) is a pair-state.
          const StateId x = sq.order_[pi], y = sq.order_[list[j]];
          if (auto target = sq.index_of(a.next(x, symbol), a.next(y, symbol))) {
            // case A
            const PrunedSquare::Index upper = sq.pair_offset_[pi] + (list[j] - pi - 1);
            if (pass == 0) {
              ++sq.offset_[upper + 1];
              if (++emitted >= std::numeric_limits<PrunedSquare::Index>::max()) {
                throw ResourceError("pruned square has too many transitions");
              }
            } else {
              const auto slot = sq.offset_[upper]++;
              sq.targets_[slot] = *target;
              sq.symbols_[slot] = symbol;
            }
          }
          // case A or B
          ++j;
        } else {
          // case C; also covers a non-pair source whose image is a pair-state,
          // since no later j can intersect L[i] again.
          ++i;
          j = i + 1;
        }
      }
    }
    if (pass == 0) {
      for (std::size_t u = 0; u < uppers; ++u) sq.offset_[u + 1] += sq.offset_[u];
      sq.targets_.resize(sq.offset_[uppers]);
      sq.symbols_.resize(sq.offset_[uppers]);
    } else {
      // Each cursor now sits at the start of the next run; shift back.
      for (std::size_t u = uppers; u > 0; --u) sq.offset_[u] = sq.offset_[u - 1];
      sq.offset_[0] = 0;
    }
  }
  return sq;
}

SquareGraph build_full_square(const Automaton& a, const RankTable& table) {
  if (!a.deterministic()) throw Error("build_full_square: automaton is not deterministic");
  const StateId n = a.num_states();
  auto keep = [&](StateId u, StateId v) {
    return u != kNoState && v != kNoState && u != v && intervals_intersect(table, u, v);
  };
  SquareGraph g;
  for (StateId u = 0; u < n; ++u) {
    for (StateId v = 0; v < n; ++v) {
      if (!keep(u, v)) continue;
      g.states.push_back({u, v});
      for (std::size_t c = 0; c < a.alphabet().size(); ++c) {
        const auto symbol = static_cast<Symbol>(c);
        const StateId u2 = a.next(u, symbol), v2 = a.next(v, symbol);
        if (keep(u2, v2)) g.transitions.push_back({{u, v}, symbol, {u2, v2}});
      }
    }
  }
  return g;
}

namespace {

// Kahn peeling on the swap quotient. Afterwards indegree[k] > 0 exactly for
// the upper indices that were not peeled.
std::vector<std::uint32_t> peel_quotient(const PrunedSquare& sq, std::size_t& peeled) {
  const PrunedSquare::Index uppers = sq.upper_count();
  std::vector<std::uint32_t> indegree(uppers, 0);
  for (PrunedSquare::Index k = 0; k < uppers; ++k) {
    sq.for_each_out(2 * k, [&](Symbol, PrunedSquare::Index to) { ++indegree[to >> 1]; });
  }
  std::vector<PrunedSquare::Index> stack;
  for (PrunedSquare::Index k = 0; k < uppers; ++k) {
    if (indegree[k] == 0) stack.push_back(k);
  }
  peeled = 0;
  while (!stack.empty()) {
    const auto k = stack.back();
    stack.pop_back();
    ++peeled;
    sq.for_each_out(2 * k, [&](Symbol, PrunedSquare::Index to) {
      if (--indegree[to >> 1] == 0) stack.push_back(to >> 1);
    });
  }
  return indegree;
}

// Backward walk from `start` through vertices accepted by `alive`, using
// `pick_pred(v)` -> (pred, symbol). Returns the cycle in forward order.
template <typename Vertex, typename PickPred, typename PairOf>
Witness walk_back(Vertex start, PickPred&& pick_pred, PairOf&& pair_of) {
  std::vector<Vertex> nodes{start};
  std::vector<Symbol> labels;  // labels[t]: nodes[t+1] -> nodes[t]
  std::unordered_map<Vertex, std::size_t> seen{{start, 0}};
  while (true) {
    auto [pred, symbol] = pick_pred(nodes.back());
    labels.push_back(symbol);
    auto [it, fresh] = seen.emplace(pred, nodes.size());
    if (!fresh) {
      const std::size_t s = it->second;
      const std::size_t t = labels.size() - 1;
      Witness w;
      // forward: nodes[t+1] (= nodes[s]) -> nodes[t] -> ... -> nodes[s+1] -> nodes[s]
      for (std::size_t i = t + 1; i > s; --i) {
        w.cycle.push_back(pair_of(nodes[i == t + 1 ? s : i]));
        w.labels.push_back(labels[i - 1]);
      }
      // rotate so the smallest pair comes first
      auto first = std::min_element(w.cycle.begin(), w.cycle.end()) - w.cycle.begin();
      std::rotate(w.cycle.begin(), w.cycle.begin() + first, w.cycle.end());
      std::rotate(w.labels.begin(), w.labels.begin() + first, w.labels.end());
      return w;
    }
    nodes.push_back(pred);
  }
}

struct ExplicitIndex {
  const SquareGraph& g;
  std::size_t of(const StatePair& p) const {
    return static_cast<std::size_t>(std::lower_bound(g.states.begin(), g.states.end(), p) -
                                    g.states.begin());
  }
};

std::vector<std::size_t> peel_explicit(const SquareGraph& g, std::size_t& peeled) {
  ExplicitIndex index{g};
  const std::size_t n = g.states.size();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::size_t> out_offset(n + 1, 0);
  std::vector<std::size_t> out_target(g.transitions.size());
  for (std::size_t e = 0; e < g.transitions.size(); ++e) {
    const auto& t = g.transitions[e];
    ++out_offset[index.of(t.from) + 1];
    out_target[e] = index.of(t.to);
    ++indegree[out_target[e]];
  }
  for (std::size_t i = 0; i < n; ++i) out_offset[i + 1] += out_offset[i];
  // transitions are sorted by source, so out edges of i are contiguous
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) stack.push_back(i);
  }
  peeled = 0;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    ++peeled;
    for (std::size_t e = out_offset[i]; e < out_offset[i + 1]; ++e) {
      if (--indegree[out_target[e]] == 0) stack.push_back(out_target[e]);
    }
  }
  return indegree;
}

}  // namespace

bool is_acyclic(const PrunedSquare& square) {
  std::size_t peeled = 0;
  peel_quotient(square, peeled);
  return peeled == square.upper_count();
}

bool is_acyclic(const SquareGraph& graph) {
  std::size_t peeled = 0;
  peel_explicit(graph, peeled);
  return peeled == graph.states.size();
}

std::optional<Witness> extract_witness(const PrunedSquare& square) {
  std::size_t peeled = 0;
  const auto remaining = peel_quotient(square, peeled);
  if (peeled == square.upper_count()) return std::nullopt;
  using Index = PrunedSquare::Index;
  Index start = 0;
  while (remaining[start] == 0) ++start;
  auto pick_pred = [&](Index x) {
    std::optional<std::pair<Index, Symbol>> found;
    square.for_each_in(x, [&](Symbol c, Index from) {
      if (!found && remaining[from >> 1] > 0) found = std::pair(from, c);
    });
    if (!found) throw Error("extract_witness: unpeeled pair-state without live predecessor");
    return *found;
  };
  return walk_back(2 * start, pick_pred, [&](Index x) { return square.pair_at(x); });
}

std::optional<Witness> extract_witness(const SquareGraph& graph) {
  std::size_t peeled = 0;
  const auto remaining = peel_explicit(graph, peeled);
  if (peeled == graph.states.size()) return std::nullopt;
  ExplicitIndex index{graph};
  const std::size_t n = graph.states.size();
  std::vector<std::size_t> in_offset(n + 1, 0);
  for (const auto& t : graph.transitions) ++in_offset[index.of(t.to) + 1];
  for (std::size_t i = 0; i < n; ++i) in_offset[i + 1] += in_offset[i];
  std::vector<std::pair<std::size_t, Symbol>> in_edges(graph.transitions.size());
  {
    auto fill = in_offset;
    for (const auto& t : graph.transitions) {
      in_edges[fill[index.of(t.to)]++] = {index.of(t.from), t.symbol};
    }
  }
  std::size_t start = 0;
  while (remaining[start] == 0) ++start;
  auto pick_pred = [&](std::size_t x) {
    for (std::size_t e = in_offset[x]; e < in_offset[x + 1]; ++e) {
      if (remaining[in_edges[e].first] > 0) return in_edges[e];
    }
    throw Error("extract_witness: unpeeled pair-state without live predecessor");
  };
  return walk_back(start, pick_pred, [&](std::size_t x) { return graph.states[x]; });
}

bool verify_witness(const Automaton& a, const RankTable& table, const Witness& w) {
  const std::size_t k = w.cycle.size();
  if (k == 0 || w.labels.size() != k || !a.deterministic()) return false;
  const StateId n = a.num_states();
  if (table.num_states() != n) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto [u, v] = w.cycle[i];
    const auto [u2, v2] = w.cycle[(i + 1) % k];
    const Symbol c = w.labels[i];
    if (u >= n || v >= n || u == v) return false;
    if (c >= a.alphabet().size()) return false;
    if (!intervals_intersect(table, u, v)) return false;
    if (a.next(u, c) != u2 || a.next(v, c) != v2) return false;
  }
  return true;
}

}  // namespace wheeler
