#include "perdyn/census/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "perdyn/census/sieve.hpp"
#include "perdyn/error.hpp"
#include "perdyn/map/reduced_map.hpp"

namespace perdyn {

namespace {

std::uint64_t parse_u64(std::string_view text, std::size_t offset,
                        const char *what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw SyntaxError(offset,
                      std::string("expected unsigned integer for ") + what);
  return v;
}

} // namespace

Congruence parse_congruence(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw SyntaxError(0, "congruence must look like m:r");
  Congruence c;
  c.m = parse_u64(text.substr(0, colon), 0, "modulus");
  c.r = parse_u64(text.substr(colon + 1), colon + 1, "residue");
  if (c.m == 0)
    throw Error(ErrorCode::Domain, "modulus must be positive");
  c.r %= c.m;
  return c;
}

std::pair<std::uint64_t, std::uint64_t>
parse_prime_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos)
    throw SyntaxError(0, "prime range must look like A..B");
  std::uint64_t lo = parse_u64(text.substr(0, dots), 0, "range start");
  std::uint64_t hi = parse_u64(text.substr(dots + 2), dots + 2, "range end");
  if (lo < 2)
    throw Error(ErrorCode::Domain, "prime range must start at 2 or above");
  if (hi < lo)
    throw Error(ErrorCode::Domain, "empty prime range");
  return {lo, hi};
}

std::string map_hash(const RationalMapQ &map) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : map.render()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void SweepRecord::check() const {
  if (!good_reduction)
    return;
  for (std::uint64_t s : image_sizes)
    if (n_periodic > s)
      throw Error(ErrorCode::InvariantViolation,
                  "p=" + std::to_string(p) + ": #Per exceeds an image size");
  BigRational expect(BigInt(std::to_string(n_periodic)),
                     BigInt(std::to_string(n_points)));
  expect.canonicalize();
  if (proportion != expect)
    throw Error(ErrorCode::InvariantViolation,
                "p=" + std::to_string(p) + ": proportion mismatch");
}

SweepRecord census_record(const RationalMapQ &map, std::uint64_t p, int n_max,
                          const std::vector<std::uint64_t> &moduli,
                          const GraphLimits &limits) {
  if (n_max < 1)
    throw Error(ErrorCode::Domain, "nmax must be >= 1");
  SweepRecord rec;
  rec.map = map.render();
  rec.map_hash = map_hash(map);
  rec.p = p;
  rec.n_points = p + 1;
  for (std::uint64_t m : moduli)
    rec.congruences[m] = p % m;
  rec.good_reduction = good_reduction(map, p);
  if (!rec.good_reduction)
    return rec;
  FuncGraph graph = build_graph(ReducedMap(map, p), limits);
  PeriodicSet per = periodic_points(graph);
  rec.n_periodic = per.count;
  rec.proportion = per.proportion;
  rec.image_sizes = image_iterate(graph, n_max);
  for (std::size_t i = 0; i < graph.size(); ++i) {
    rec.max_tail = std::max(rec.max_tail, graph.tail_len()[i]);
    rec.max_cycle = std::max(rec.max_cycle, graph.cycle_len()[i]);
  }
  return rec;
}

std::vector<std::uint64_t> sweep_primes(const SweepConfig &config) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_in_range(config.lo, config.hi)) {
    bool ok = std::all_of(config.filters.begin(), config.filters.end(),
                          [p](const Congruence &c) { return c.matches(p); });
    if (ok)
      out.push_back(p);
  }
  return out;
}

SweepOutcome run_sweep(const RationalMapQ &map, const SweepConfig &config,
                       const std::function<void(const SweepRecord &)> &sink,
                       const std::set<std::uint64_t> &skip,
                       const std::atomic<bool> *cancel) {
  SweepOutcome outcome;
  std::vector<std::uint64_t> moduli;
  for (const Congruence &c : config.filters)
    moduli.push_back(c.m);
  moduli.insert(moduli.end(), config.moduli.begin(), config.moduli.end());
  std::sort(moduli.begin(), moduli.end());
  moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : sweep_primes(config)) {
    ++outcome.candidates;
    if (skip.count(p))
      ++outcome.skipped;
    else
      primes.push_back(p);
  }
  if (primes.empty())
    return outcome;

  const std::size_t chunk = std::max<std::size_t>(config.chunk, 1);
  const std::size_t n_chunks = (primes.size() + chunk - 1) / chunk;
  unsigned jobs =
      config.jobs ? config.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1U, std::min<unsigned>(jobs, n_chunks));
  // Workers may run at most this many chunks ahead of the writer.
  const std::size_t window = 4 * static_cast<std::size_t>(jobs);

  std::vector<std::vector<SweepRecord>> slots(n_chunks);
  std::vector<char> ready(n_chunks, 0);
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  std::size_t written = 0;
  unsigned live = jobs;
  bool stop = false;
  std::exception_ptr failure;

  auto cancelled = [&] { return cancel && cancel->load(); };

  auto worker = [&] {
    for (;;) {
      std::size_t c;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop || next < written + window; });
        if (stop || next >= n_chunks)
          break;
        c = next++;
      }
      std::vector<SweepRecord> out;
      bool complete = true;
      try {
        const std::size_t end = std::min(primes.size(), (c + 1) * chunk);
        for (std::size_t i = c * chunk; i < end; ++i) {
          if (cancelled()) {
            complete = false;
            break;
          }
          out.push_back(census_record(map, primes[i], config.n_max, moduli,
                                      config.graph));
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure)
          failure = std::current_exception();
        stop = true;
        complete = false;
      }
      std::lock_guard lock(mu);
      if (complete) {
        slots[c] = std::move(out);
        ready[c] = 1;
      } else {
        stop = true;
      }
      cv.notify_all();
      if (!complete)
        break;
    }
    std::lock_guard lock(mu);
    --live;
    cv.notify_all();
  };

  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j)
    threads.emplace_back(worker);

  std::exception_ptr sink_failure;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    std::vector<SweepRecord> batch;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return ready[c] || live == 0 || stop; });
      if (!ready[c])
        break;
      batch = std::move(slots[c]);
    }
    try {
      for (const SweepRecord &rec : batch) {
        rec.check();
        sink(rec);
        ++outcome.emitted;
      }
    } catch (...) {
      sink_failure = std::current_exception();
    }
    std::lock_guard lock(mu);
    if (sink_failure) {
      stop = true;
      cv.notify_all();
      break;
    }
    written = c + 1;
    cv.notify_all();
  }
  {
    std::lock_guard lock(mu);
    stop = true;
    cv.notify_all();
  }
  for (auto &t : threads)
    t.join();
  if (sink_failure)
    std::rethrow_exception(sink_failure);
  if (failure)
    std::rethrow_exception(failure);
  outcome.cancelled = outcome.emitted + outcome.skipped < outcome.candidates;
  return outcome;
}

SweepSummary summarize(const std::vector<SweepRecord> &records) {
  std::vector<const SweepRecord *> good;
  SweepSummary s;
  for (const SweepRecord &r : records) {
    if (r.good_reduction)
      good.push_back(&r);
    else
      ++s.bad;
  }
  if (good.empty())
    throw Error(ErrorCode::Domain, "no good-reduction records to summarize");
  std::sort(
      good.begin(), good.end(),
      [](const SweepRecord *a, const SweepRecord *b) { return a->p < b->p; });
  s.count = good.size();
  s.min = s.max = good.front()->proportion;
  s.argmin = good.front()->p;
  BigRational sum(0);
  for (const SweepRecord *r : good) {
    sum += r->proportion;
    if (r->proportion < s.min) {
      s.min = r->proportion;
      s.argmin = r->p;
    }
    if (r->proportion > s.max)
      s.max = r->proportion;
    for (const auto &[m, res] : r->congruences) {
      ClassStats &cs = s.by_class[{m, res}];
      if (cs.count == 0 || r->proportion < cs.min)
        cs.min = r->proportion;
      if (cs.count == 0 || r->proportion > cs.max)
        cs.max = r->proportion;
      cs.mean += r->proportion;
      ++cs.count;
    }
  }
  s.mean = sum / static_cast<long>(s.count);
  for (auto &[key, cs] : s.by_class)
    cs.mean /= static_cast<long>(cs.count);

  s.liminf_trace.resize(good.size());
  BigRational running = good.back()->proportion;
  for (std::size_t i = good.size(); i-- > 0;) {
    if (good[i]->proportion < running)
      running = good[i]->proportion;
    s.liminf_trace[i] = {good[i]->p, running};
  }
  return s;
}

} // namespace perdyn
