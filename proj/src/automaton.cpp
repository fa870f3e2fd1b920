#include "subshift/automaton.hpp"

#include <deque>
#include <map>

namespace subshift {

namespace {

struct TrieNode {
  std::map<Letter, int> children;
  int fail = 0;
  bool terminal = false;
};

}  // namespace

AvoidanceAutomaton::AvoidanceAutomaton(Alphabet alphabet, const ForbiddenList& forbidden,
                                       int horizon)
    : alphabet_(std::move(alphabet)), horizon_(horizon) {
  std::vector<TrieNode> trie(1);
  for (int n = 1; n <= horizon; ++n) {
    if (n <= forbidden.horizon() && !forbidden.enumerable(n))
      throw SubshiftError("horizon unsupported: forbidden list not enumerable to requested horizon");
    if (n > forbidden.horizon() && !forbidden.finite())
      throw SubshiftError("horizon unsupported: forbidden list materialized only to " +
                          std::to_string(forbidden.horizon()));
    for (const Word& w : forbidden.words_of_length(n)) {
      int node = 0;
      for (Letter a : w) {
        auto it = trie[node].children.find(a);
        if (it == trie[node].children.end()) {
          trie.push_back(TrieNode{});
          it = trie[node].children.emplace(a, static_cast<int>(trie.size()) - 1).first;
        }
        node = it->second;
      }
      trie[node].terminal = true;
    }
  }

  // Failure links in BFS order; terminal flags propagate down suffix chains.
  std::deque<int> queue;
  for (auto& [a, child] : trie[0].children) {
    trie[child].fail = 0;
    queue.push_back(child);
  }
  std::vector<int> order;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    order.push_back(node);
    if (trie[trie[node].fail].terminal) trie[node].terminal = true;
    for (auto& [a, child] : trie[node].children) {
      int f = trie[node].fail;
      while (f != 0 && !trie[f].children.count(a)) f = trie[f].fail;
      auto it = trie[f].children.find(a);
      trie[child].fail = (it != trie[f].children.end() && it->second != child) ? it->second : 0;
      queue.push_back(child);
    }
  }

  // Renumber live states; all terminal states collapse to kDead.
  std::vector<State> id(trie.size(), kDead);
  if (!trie[0].terminal) id[0] = 0;
  int next = 1;
  for (int node : order)
    if (!trie[node].terminal) id[node] = next++;
  if (trie[0].terminal)
    throw SubshiftError("empty word cannot be forbidden");
  live_states_ = next;

  table_.assign(static_cast<std::size_t>(live_states_) * alphabet_.size(), kDead);
  // goto with failure fallback, computed in BFS order over the trie.
  std::vector<std::vector<State>> goto_raw(trie.size());
  auto compute_row = [&](int node) {
    goto_raw[node].assign(alphabet_.size(), 0);
    for (Letter a = 0; a < alphabet_.size(); ++a) {
      auto it = trie[node].children.find(a);
      int target;
      if (it != trie[node].children.end()) {
        target = it->second;
      } else if (node == 0) {
        target = 0;
      } else {
        target = goto_raw[trie[node].fail][a];
      }
      goto_raw[node][a] = static_cast<State>(target);
    }
  };
  compute_row(0);
  for (int node : order) compute_row(node);

  bool any_dead = false;
  auto fill_table = [&](int node) {
    if (id[node] == kDead) return;
    for (Letter a = 0; a < alphabet_.size(); ++a) {
      int target = goto_raw[node][a];
      State tid = trie[target].terminal ? kDead : id[target];
      if (tid == kDead) any_dead = true;
      table_[static_cast<std::size_t>(id[node]) * alphabet_.size() + a] = tid;
    }
  };
  fill_table(0);
  for (int node : order) fill_table(node);
  has_dead_ = any_dead;
}

}  // namespace subshift
