#include "perdyn/dynamics/func_graph.hpp"

#include <algorithm>

#include "perdyn/error.hpp"

namespace perdyn {

FuncGraph::FuncGraph(std::uint64_t p, std::vector<std::uint32_t> successor)
    : p_(p), successor_(std::move(successor)) {
  const std::size_t n = successor_.size();
  if (n != p_ + 1)
    throw Error(ErrorCode::InvariantViolation,
                "successor table has " + std::to_string(n) +
                    " entries for p=" + std::to_string(p_));

  // Kahn-style peeling: repeatedly delete points nothing maps to. What
  // survives is the intersection of all forward images, i.e. the cycles.
  std::vector<std::uint32_t> indegree(n, 0);
  for (auto s : successor_)
    ++indegree[s];
  std::vector<std::uint32_t> peeled;
  peeled.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (indegree[i] == 0)
      peeled.push_back(i);
  for (std::size_t head = 0; head < peeled.size(); ++head) {
    std::uint32_t s = successor_[peeled[head]];
    if (--indegree[s] == 0)
      peeled.push_back(s);
  }
  periodic_.assign(n, true);
  for (auto i : peeled)
    periodic_[i] = false;
  periodic_count_ = n - peeled.size();

  tail_.assign(n, 0);
  cycle_.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!periodic_[i] || cycle_[i] != 0)
      continue;
    std::uint32_t len = 1;
    for (std::uint32_t j = successor_[i]; j != i; j = successor_[j])
      ++len;
    cycle_[i] = len;
    for (std::uint32_t j = successor_[i]; j != i; j = successor_[j])
      cycle_[j] = len;
  }
  // In reverse peel order a point's successor is already resolved.
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    std::uint32_t s = successor_[*it];
    tail_[*it] = tail_[s] + 1;
    cycle_[*it] = cycle_[s];
  }
}

FuncGraph build_graph(const ReducedMap &map, const GraphLimits &limits) {
  const std::uint64_t p = map.prime();
  if (p > limits.max_prime)
    throw Error(ErrorCode::Resource,
                "p=" + std::to_string(p) +
                    " exceeds max_prime=" + std::to_string(limits.max_prime));
  std::vector<std::uint32_t> succ(p + 1);
  for (std::uint64_t i = 0; i <= p; ++i)
    succ[i] = static_cast<std::uint32_t>(map.eval(ProjPoint{i}).index);
  return FuncGraph(p, std::move(succ));
}

PeriodicSet periodic_points(const FuncGraph &graph) {
  PeriodicSet out;
  const auto &mask = graph.periodic_mask();
  for (std::uint32_t i = 0; i < mask.size(); ++i)
    if (mask[i])
      out.points.push_back(i);
  out.count = out.points.size();
  out.proportion = BigRational(BigInt(std::to_string(out.count)),
                               BigInt(std::to_string(graph.size())));
  out.proportion.canonicalize();
  return out;
}

std::vector<bool> image_set(const FuncGraph &graph, int k) {
  std::vector<bool> current(graph.size(), true);
  for (int step = 0; step < k; ++step) {
    std::vector<bool> next(graph.size(), false);
    for (std::size_t i = 0; i < current.size(); ++i)
      if (current[i])
        next[graph.successor()[i]] = true;
    current = std::move(next);
  }
  return current;
}

std::vector<std::uint64_t> image_iterate(const FuncGraph &graph, int n) {
  std::vector<std::uint64_t> sizes;
  std::vector<bool> current(graph.size(), true);
  for (int step = 0; step < n; ++step) {
    std::vector<bool> next(graph.size(), false);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (!current[i])
        continue;
      auto s = graph.successor()[i];
      if (!next[s]) {
        next[s] = true;
        ++count;
      }
    }
    sizes.push_back(count);
    current = std::move(next);
  }
  return sizes;
}

OrbitStats orbit_stats(const FuncGraph &graph) {
  OrbitStats st;
  const auto &tail = graph.tail_len();
  const auto &cycle = graph.cycle_len();
  const auto &mask = graph.periodic_mask();
  std::map<std::uint32_t, std::uint64_t> points_on_cycles;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    st.rho_sum += static_cast<std::uint64_t>(tail[i]) + cycle[i];
    st.max_tail = std::max(st.max_tail, tail[i]);
    st.max_cycle = std::max(st.max_cycle, cycle[i]);
    if (mask[i])
      ++points_on_cycles[cycle[i]];
  }
  for (auto [len, pts] : points_on_cycles)
    st.cycle_histogram[len] = pts / len;
  st.mean_rho = BigRational(BigInt(std::to_string(st.rho_sum)),
                            BigInt(std::to_string(graph.size())));
  st.mean_rho.canonicalize();
  return st;
}

std::vector<bool> periodic_mask_floyd(const FuncGraph &graph) {
  const auto &f = graph.successor();
  std::vector<bool> mask(graph.size(), false);
  for (std::uint32_t x = 0; x < graph.size(); ++x) {
    std::uint32_t slow = f[x], fast = f[f[x]];
    while (slow != fast) {
      slow = f[slow];
      fast = f[f[fast]];
    }
    // slow is on the cycle of x's orbit; x is periodic iff it lies on it.
    std::uint32_t y = slow;
    do {
      if (y == x) {
        mask[x] = true;
        break;
      }
      y = f[y];
    } while (y != slow);
  }
  return mask;
}

} // namespace perdyn
