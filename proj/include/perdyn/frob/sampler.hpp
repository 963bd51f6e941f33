#ifndef PERDYN_FROB_SAMPLER_HPP
#define PERDYN_FROB_SAMPLER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perdyn/algebra/ddf.hpp"
#include "perdyn/map/reduced_map.hpp"
#include "perdyn/wreath/spectrum.hpp"

namespace perdyn {

/// Frobenius at (t - a) acting on the roots of p_n(x) - a q_n(x).
struct CycleTypeSample {
  std::uint64_t a = 0;
  /// Empty when ramified.
  DegreeCounts degrees;
  int linear_count = 0;
  /// p_n - a q_n is not squarefree or has degree below d^n.
  bool ramified = false;
  bool degree_dropped = false;
};

/// Precomputed (p_n, q_n) mod p shared by all specializations.
class FiberFamily {
public:
  FiberFamily(const ReducedMap &map, int n, const MapLimits &limits = {});

  std::uint64_t prime() const { return iterate_.num.modulus(); }
  int n() const { return iterate_.n; }
  long full_degree() const { return iterate_.hom_degree; }
  const IteratePairFp &iterate() const { return iterate_; }

  /// p_n(x) - a q_n(x)
  PolyFp specialize(std::uint64_t a) const;
  CycleTypeSample cycle_type(std::uint64_t a) const;

private:
  IteratePairFp iterate_;
};

CycleTypeSample frobenius_cycle_type(const RationalMapQ &map, std::uint64_t p,
                                     int n, std::uint64_t a);

struct SampleMode {
  /// Exhaustive over all a in F_p when unset and p <= exhaustive_limit.
  std::optional<std::uint64_t> sample_size;
  std::uint64_t seed = 0x5eed;
  std::uint64_t exhaustive_limit = 50'000;
  std::uint64_t default_sample_size = 5'000;
};

struct FrobReport {
  std::uint64_t prime = 0;
  int n = 0;
  int degree = 0;
  bool exhaustive = true;
  std::uint64_t examined = 0;
  std::uint64_t ramified = 0;
  std::uint64_t unramified = 0;
  /// Unramified a whose fiber has an F_p-root.
  std::uint64_t root_bearing = 0;
  /// linear_count -> number of unramified a
  std::map<int, std::uint64_t> linear_histogram;
  /// root_bearing / unramified (1 when n = 0)
  BigRational empirical_fpp;
  /// a with any root in F_p (ramified included) / examined
  BigRational affine_image_fraction;
  /// #phi^n(P^1(F_p)) / (p + 1), exhaustive mode only
  std::optional<BigRational> image_proportion;
  /// (#ramified + 2) / p
  BigRational agreement_slack;
  std::vector<std::string> warnings;
};

FrobReport empirical_fpp(const RationalMapQ &map, std::uint64_t p, int n,
                         const SampleMode &mode = {});

struct PredictionComparison {
  BigRational predicted_fpp;
  /// k -> probability that [G]^n fixes exactly k leaves
  std::map<int, BigRational> predicted;
  std::map<int, BigRational> empirical;
  /// (1/2) sum_k |empirical_k - predicted_k|
  BigRational total_variation;
};

PredictionComparison compare_to_prediction(const FrobReport &report,
                                           const FixedPointSpectrum &spec,
                                           const FppLimits &limits = {});

/// TV distance between two distributions given as k -> probability.
BigRational total_variation(const std::map<int, BigRational> &a,
                            const std::map<int, BigRational> &b);

} // namespace perdyn

#endif
