#include "wheeler/minimize.hpp"

#include <algorithm>
#include <unordered_set>

namespace wheeler {
namespace {

// Refinable partition over elements 0..size-1 (Valmari-style layout: each
// block is a contiguous range of `elems`, marked elements at its front).
class Partition {
 public:
  explicit Partition(std::size_t size) : elems_(size), pos_(size), block_of_(size, 0) {
    for (std::size_t i = 0; i < size; ++i) elems_[i] = pos_[i] = i;
    if (size > 0) blocks_.push_back({0, size, 0});
  }

  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_of(std::size_t e) const { return block_of_[e]; }
  std::size_t size(std::size_t b) const { return blocks_[b].end - blocks_[b].begin; }
  std::span<const std::size_t> members(std::size_t b) const {
    return {elems_.data() + blocks_[b].begin, elems_.data() + blocks_[b].end};
  }

  void mark(std::size_t e) {
    std::size_t b = block_of_[e];
    Block& blk = blocks_[b];
    std::size_t target = blk.begin + blk.marked;
    if (pos_[e] < target) return;  // already marked
    std::size_t other = elems_[target];
    std::swap(elems_[pos_[e]], elems_[target]);
    pos_[other] = pos_[e];
    pos_[e] = target;
    if (blk.marked++ == 0) touched_.push_back(b);
  }

  /// Splits every touched block into marked / unmarked parts. Calls
  /// `on_split(old_block, new_block)` for each real split; the marked part
  /// becomes the new block.
  template <typename F>
  void split_marked(F&& on_split) {
    for (std::size_t b : touched_) {
      Block& blk = blocks_[b];
      std::size_t marked = blk.marked;
      blk.marked = 0;
      if (marked == blk.end - blk.begin) continue;
      std::size_t nb = blocks_.size();
      Block fresh{blk.begin, blk.begin + marked, 0};
      blk.begin += marked;
      blocks_.push_back(fresh);
      for (std::size_t i = fresh.begin; i < fresh.end; ++i) block_of_[elems_[i]] = nb;
      on_split(b, nb);
    }
    touched_.clear();
  }

 private:
  struct Block {
    std::size_t begin, end, marked;
  };
  std::vector<std::size_t> elems_, pos_, block_of_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> touched_;
};

}  // namespace

MinimizeResult minimize(const Automaton& input) {
  if (!input.deterministic()) throw Error("minimize: automaton is not deterministic");
  auto [a, trim_report] = trim(input);

  MinimizeResult result;
  result.state_map.assign(input.num_states(), std::nullopt);
  const std::size_t n = a.num_states();
  if (n == 0) {
    result.automaton = std::move(a);
    return result;
  }

  const std::size_t k = a.alphabet().size();
  const std::size_t sink = n;
  const std::size_t total = n + 1;
  auto succ = [&](std::size_t u, std::size_t c) -> std::size_t {
    if (u == sink) return sink;
    StateId v = a.next(static_cast<StateId>(u), static_cast<Symbol>(c));
    return v == kNoState ? sink : v;
  };

  // Inverse transition lists per (symbol, target) in CSR form.
  std::vector<std::size_t> inv_offset(k * total + 1, 0);
  for (std::size_t u = 0; u < total; ++u) {
    for (std::size_t c = 0; c < k; ++c) ++inv_offset[c * total + succ(u, c) + 1];
  }
  for (std::size_t i = 0; i < k * total; ++i) inv_offset[i + 1] += inv_offset[i];
  std::vector<std::size_t> inv(k * total);
  {
    auto fill = inv_offset;
    for (std::size_t u = 0; u < total; ++u) {
      for (std::size_t c = 0; c < k; ++c) inv[fill[c * total + succ(u, c)]++] = u;
    }
  }

  Partition partition(total);
  for (StateId f : a.finals()) partition.mark(f);
  partition.split_marked([](std::size_t, std::size_t) {});

  std::vector<std::size_t> worklist;
  std::vector<std::uint8_t> in_worklist;
  auto push = [&](std::size_t b) {
    if (in_worklist.size() <= b) in_worklist.resize(b + 1, 0);
    if (!in_worklist[b]) {
      in_worklist[b] = 1;
      worklist.push_back(b);
    }
  };
  for (std::size_t b = 0; b < partition.num_blocks(); ++b) push(b);

  std::vector<std::size_t> splitter;
  while (!worklist.empty()) {
    std::size_t b = worklist.back();
    worklist.pop_back();
    in_worklist[b] = 0;
    auto members = partition.members(b);
    splitter.assign(members.begin(), members.end());
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t v : splitter) {
        for (std::size_t i = inv_offset[c * total + v]; i < inv_offset[c * total + v + 1]; ++i) {
          partition.mark(inv[i]);
        }
      }
      partition.split_marked([&](std::size_t old_block, std::size_t new_block) {
        if (in_worklist.size() > old_block && in_worklist[old_block]) {
          push(new_block);
        } else if (partition.size(new_block) <= partition.size(old_block)) {
          push(new_block);
        } else {
          push(old_block);
        }
      });
    }
  }

  // Number blocks by their smallest member; the sink's block is dropped.
  const std::size_t sink_block = partition.block_of(sink);
  std::vector<std::size_t> block_min(partition.num_blocks(), total);
  for (std::size_t u = 0; u < n; ++u) {
    auto& slot = block_min[partition.block_of(u)];
    slot = std::min(slot, u);
  }
  std::vector<StateId> block_id(partition.num_blocks(), kNoState);
  StateId next_id = 0;
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t b = partition.block_of(u);
    if (b == sink_block) throw Error("minimize: a useful state merged with the dead sink");
    if (block_min[b] == u) block_id[b] = next_id++;
  }

  std::vector<Transition> transitions;
  std::vector<StateId> finals;
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t b = partition.block_of(u);
    if (block_min[b] != u) continue;
    if (a.is_final(static_cast<StateId>(u))) finals.push_back(block_id[b]);
    for (const auto& t : a.out(static_cast<StateId>(u))) {
      transitions.push_back({block_id[b], t.symbol, block_id[partition.block_of(t.to)]});
    }
  }
  result.automaton = Automaton(a.alphabet(), next_id, block_id[partition.block_of(a.source())],
                               std::move(finals), std::move(transitions));
  for (StateId u = 0; u < input.num_states(); ++u) {
    if (auto t = trim_report.state_map[u]) result.state_map[u] = block_id[partition.block_of(*t)];
  }
  return result;
}

bool equivalent(const Automaton& a, const Automaton& b) {
  if (!(a.alphabet() == b.alphabet())) throw Error("equivalent: alphabets differ");
  if (!a.deterministic() || !b.deterministic()) {
    throw Error("equivalent: both automata must be deterministic");
  }
  const std::size_t k = a.alphabet().size();
  auto final_a = [&](StateId u) { return u != kNoState && a.is_final(u); };
  auto final_b = [&](StateId u) { return u != kNoState && b.is_final(u); };
  auto key = [](StateId x, StateId y) { return (std::uint64_t{x} << 32) | y; };

  StateId sa = a.empty() ? kNoState : a.source();
  StateId sb = b.empty() ? kNoState : b.source();
  std::unordered_set<std::uint64_t> seen{key(sa, sb)};
  std::vector<std::pair<StateId, StateId>> stack{{sa, sb}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (final_a(x) != final_b(y)) return false;
    for (std::size_t c = 0; c < k; ++c) {
      StateId nx = x == kNoState ? kNoState : a.next(x, static_cast<Symbol>(c));
      StateId ny = y == kNoState ? kNoState : b.next(y, static_cast<Symbol>(c));
      if (nx == kNoState && ny == kNoState) continue;  // both dead from here on
      if (seen.insert(key(nx, ny)).second) stack.push_back({nx, ny});
    }
  }
  return true;
}

}  // namespace wheeler
