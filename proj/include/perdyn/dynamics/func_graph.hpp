#ifndef PERDYN_DYNAMICS_FUNC_GRAPH_HPP
#define PERDYN_DYNAMICS_FUNC_GRAPH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "perdyn/algebra/rational.hpp"
#include "perdyn/map/reduced_map.hpp"

namespace perdyn {

struct GraphLimits {
  std::uint64_t max_prime = std::uint64_t{1} << 26;
};

/// Functional graph of phi_p on P^1(F_p). Points are ProjPoint indices
/// 0..p, so every vector here has length p + 1.
class FuncGraph {
public:
  /// Successor table only; the decomposition is computed on construction.
  FuncGraph(std::uint64_t p, std::vector<std::uint32_t> successor);

  std::uint64_t prime() const { return p_; }
  std::size_t size() const { return successor_.size(); }
  const std::vector<std::uint32_t> &successor() const { return successor_; }
  const std::vector<bool> &periodic_mask() const { return periodic_; }
  /// Steps until the orbit first lands on a cycle.
  const std::vector<std::uint32_t> &tail_len() const { return tail_; }
  /// Length of the cycle the orbit ends in.
  const std::vector<std::uint32_t> &cycle_len() const { return cycle_; }
  std::uint64_t periodic_count() const { return periodic_count_; }

private:
  std::uint64_t p_;
  std::vector<std::uint32_t> successor_;
  std::vector<bool> periodic_;
  std::vector<std::uint32_t> tail_;
  std::vector<std::uint32_t> cycle_;
  std::uint64_t periodic_count_ = 0;
};

FuncGraph build_graph(const ReducedMap &map, const GraphLimits &limits = {});

struct PeriodicSet {
  std::vector<std::uint32_t> points;
  std::uint64_t count = 0;
  /// count / (p + 1)
  BigRational proportion;
};

PeriodicSet periodic_points(const FuncGraph &graph);

/// #phi^k(P^1(F_p)) for k = 1..n.
std::vector<std::uint64_t> image_iterate(const FuncGraph &graph, int n);

/// Indicator of phi^k(P^1(F_p)).
std::vector<bool> image_set(const FuncGraph &graph, int k);

struct OrbitStats {
  /// Sum over points of tail + cycle length; mean = rho_sum / (p + 1).
  std::uint64_t rho_sum = 0;
  BigRational mean_rho;
  std::uint32_t max_tail = 0;
  std::uint32_t max_cycle = 0;
  /// cycle length -> number of distinct cycles of that length
  std::map<std::uint32_t, std::uint64_t> cycle_histogram;
};

OrbitStats orbit_stats(const FuncGraph &graph);

/// Periodic mask by per-point Floyd cycle detection; debug oracle for the
/// source-peeling decomposition, O(p * rho).
std::vector<bool> periodic_mask_floyd(const FuncGraph &graph);

} // namespace perdyn

#endif
