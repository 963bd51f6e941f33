#ifndef PERDYN_CENSUS_SWEEP_HPP
#define PERDYN_CENSUS_SWEEP_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perdyn/algebra/rational.hpp"
#include "perdyn/dynamics/func_graph.hpp"
#include "perdyn/map/rational_map.hpp"

namespace perdyn {

/// p = r (mod m).
struct Congruence {
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  bool matches(std::uint64_t p) const { return p % m == r; }
};

/// "m:r"; throws Syntax on malformed input and Domain when m = 0.
Congruence parse_congruence(std::string_view text);

/// "A..B"
std::pair<std::uint64_t, std::uint64_t>
parse_prime_range(std::string_view text);

/// 16 hex digits of FNV-1a over map.render().
std::string map_hash(const RationalMapQ &map);

struct SweepRecord {
  std::string map_hash;
  std::string map;
  std::uint64_t p = 0;
  bool good_reduction = true;
  std::uint64_t n_points = 0;
  std::uint64_t n_periodic = 0;
  BigRational proportion;
  /// #phi^k(P^1(F_p)) for k = 1..n_max
  std::vector<std::uint64_t> image_sizes;
  std::uint32_t max_tail = 0;
  std::uint32_t max_cycle = 0;
  /// modulus -> p mod modulus
  std::map<std::uint64_t, std::uint64_t> congruences;

  /// Throws InvariantViolation unless n_periodic <= every image size and
  /// proportion = n_periodic / n_points.
  void check() const;
};

/// Full census of map mod p. At a bad prime only the identifying fields are
/// set and good_reduction is false.
SweepRecord census_record(const RationalMapQ &map, std::uint64_t p, int n_max,
                          const std::vector<std::uint64_t> &moduli = {},
                          const GraphLimits &limits = {});

struct SweepConfig {
  std::uint64_t lo = 3;
  std::uint64_t hi = 1000;
  std::vector<Congruence> filters;
  /// Extra moduli to annotate; filter moduli are always annotated.
  std::vector<std::uint64_t> moduli;
  int n_max = 5;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned jobs = 0;
  std::size_t chunk = 64;
  GraphLimits graph;
};

/// Primes in [lo, hi] passing every filter, ascending.
std::vector<std::uint64_t> sweep_primes(const SweepConfig &config);

struct SweepOutcome {
  std::size_t candidates = 0; ///< primes passing the filters
  std::size_t skipped = 0;    ///< already present (resume)
  std::size_t emitted = 0;
  bool cancelled = false;
};

/// Streams one record per candidate prime, in increasing p, to sink. Workers
/// compute chunks independently; only the ordered hand-off to sink is
/// synchronized, so output is independent of the worker count. When cancel
/// becomes true, the records emitted so far form a prefix of the full run.
SweepOutcome run_sweep(const RationalMapQ &map, const SweepConfig &config,
                       const std::function<void(const SweepRecord &)> &sink,
                       const std::set<std::uint64_t> &skip = {},
                       const std::atomic<bool> *cancel = nullptr);

struct ClassStats {
  std::size_t count = 0;
  BigRational min;
  BigRational mean;
  BigRational max;
};

struct SweepSummary {
  std::size_t count = 0; ///< good-reduction records
  std::size_t bad = 0;
  BigRational min;
  BigRational mean;
  BigRational max;
  std::uint64_t argmin = 0;
  /// (x, min proportion over records with p >= x), x ascending.
  std::vector<std::pair<std::uint64_t, BigRational>> liminf_trace;
  /// (m, r) -> stats over good records with p = r mod m
  std::map<std::pair<std::uint64_t, std::uint64_t>, ClassStats> by_class;
};

/// Throws Domain when there are no good-reduction records.
SweepSummary summarize(const std::vector<SweepRecord> &records);

} // namespace perdyn

#endif
