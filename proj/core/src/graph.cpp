#include "polybisim/graph.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace polybisim {

std::vector<std::size_t> strongly_connected_components(const Adjacency& succ) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = succ.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // (node, next edge)
  std::size_t counter = 0, components = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < succ[v].size()) {
        const std::size_t w = succ[v][edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = components;
        } while (w != done);
        ++components;
      }
    }
  }
  return component;
}

std::vector<bool> on_cycle(const Adjacency& succ) {
  const auto component = strongly_connected_components(succ);
  std::vector<std::size_t> size(succ.size(), 0);
  for (std::size_t c : component) ++size[c];
  std::vector<bool> out(succ.size(), false);
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (size[component[v]] > 1) {
      out[v] = true;
    } else {
      out[v] = std::find(succ[v].begin(), succ[v].end(), v) != succ[v].end();
    }
  }
  return out;
}

std::vector<bool> reachable(const Adjacency& succ, const std::vector<bool>& seeds) {
  std::vector<bool> seen = seeds;
  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < seeds.size(); ++v) {
    if (seeds[v]) work.push_back(v);
  }
  while (!work.empty()) {
    const std::size_t v = work.back();
    work.pop_back();
    for (std::size_t w : succ[v]) {
      if (!seen[w]) {
        seen[w] = true;
        work.push_back(w);
      }
    }
  }
  return seen;
}

Adjacency reverse(const Adjacency& succ) {
  Adjacency pred(succ.size());
  for (std::size_t v = 0; v < succ.size(); ++v) {
    for (std::size_t w : succ[v]) pred[w].push_back(v);
  }
  return pred;
}

}  // namespace polybisim
