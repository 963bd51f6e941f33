#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "perdyn/census/presets.hpp"
#include "perdyn/census/sieve.hpp"
#include "perdyn/census/store.hpp"
#include "perdyn/census/sweep.hpp"
#include "perdyn/error.hpp"

using namespace perdyn;
namespace fs = std::filesystem;

namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0)
      return false;
  return true;
}

std::vector<SweepRecord> collect(const RationalMapQ &map,
                                 const SweepConfig &cfg) {
  std::vector<SweepRecord> out;
  run_sweep(map, cfg, [&](const SweepRecord &r) { out.push_back(r); });
  return out;
}

std::string jsonl(const RationalMapQ &map, const SweepConfig &cfg) {
  std::ostringstream os;
  RecordWriter w(os, RecordFormat::Json);
  run_sweep(map, cfg, [&](const SweepRecord &r) { w.write(r); });
  return os.str();
}

std::string slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempFile {
  fs::path path;
  explicit TempFile(const char *name)
      : path(fs::temp_directory_path() /
             (std::string("perdyn_") + name + "_" +
              std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

// Appends a resumed run to path the same way the CLI does.
void resume_into(const fs::path &path, const RationalMapQ &map,
                 const SweepConfig &cfg) {
  auto skip = prepare_resume(path, map_hash(map));
  std::ofstream out(path, std::ios::app | std::ios::binary);
  RecordWriter w(out, RecordFormat::Json);
  run_sweep(map, cfg, [&](const SweepRecord &r) { w.write(r); }, skip);
}

} // namespace

TEST_CASE("sieve agrees with trial division") {
  auto ps = primes_in_range(0, 5000);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t n = 0; n <= 5000; ++n)
    if (trial_division(n))
      expect.push_back(n);
  CHECK(ps == expect);
  auto mid = primes_in_range(1000000, 1002000);
  for (auto p : mid)
    CHECK(trial_division(p));
  std::size_t count = 0;
  for (std::uint64_t n = 1000000; n <= 1002000; ++n)
    count += trial_division(n);
  CHECK(mid.size() == count);
  CHECK(primes_in_range(24, 28).empty());
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1000000007ULL * 998244353ULL));
  CHECK(is_prime(18446744073709551557ULL));
  for (std::uint64_t n = 0; n < 3000; ++n)
    CHECK(is_prime(n) == trial_division(n));
}

TEST_CASE("congruence and range parsing") {
  Congruence c = parse_congruence("27:1");
  CHECK(c.m == 27);
  CHECK(c.r == 1);
  CHECK(c.matches(109));
  CHECK_FALSE(c.matches(107));
  CHECK_THROWS_AS(parse_congruence("27"), Error);
  CHECK_THROWS_AS(parse_congruence("0:1"), Error);
  CHECK_THROWS_AS(parse_congruence("a:b"), Error);
  CHECK(parse_prime_range("3..1000") ==
        std::pair<std::uint64_t, std::uint64_t>{3, 1000});
  CHECK_THROWS_AS(parse_prime_range("10..3"), Error);
  CHECK_THROWS_AS(parse_prime_range("1..3"), Error);
  CHECK_THROWS_AS(parse_prime_range("3-10"), Error);
}

TEST_CASE("census records match worked examples") {
  SweepRecord a = census_record(parse_map("x^2-2"), 5, 3);
  CHECK(a.good_reduction);
  CHECK(a.n_points == 6);
  CHECK(a.n_periodic == 3);
  CHECK(a.proportion == BigRational(1, 2));
  CHECK(a.image_sizes == std::vector<std::uint64_t>{4, 3, 3});
  a.check();

  SweepRecord b = census_record(parse_map("x^2"), 3, 2);
  CHECK(b.proportion == BigRational(3, 4));

  SweepRecord c = census_record(parse_map("x^3"), 109, 2, {27});
  CHECK(c.n_periodic == 6);
  CHECK(c.proportion == BigRational(3, 55));
  CHECK(c.congruences.at(27) == 1);

  SweepRecord bad = census_record(parse_map("(x^2-1)/(2*x)"), 2, 2);
  CHECK_FALSE(bad.good_reduction);

  SweepRecord broken = a;
  broken.n_periodic = 5;
  CHECK_THROWS_AS(broken.check(), Error);
}

TEST_CASE("filtered prime selection") {
  SweepConfig cfg;
  cfg.lo = 3;
  cfg.hi = 1000;
  cfg.filters = {parse_congruence("27:1")};
  auto ps = sweep_primes(cfg);
  CHECK(ps == std::vector<std::uint64_t>{109, 163, 271, 379, 433, 487, 541, 757,
                                         811, 919});
  for (auto p : ps)
    CHECK(p % 27 == 1);
}

TEST_CASE("sweep output does not depend on the worker count") {
  RationalMapQ map = parse_map("x^2+1");
  SweepConfig cfg;
  cfg.lo = 3;
  cfg.hi = 3000;
  cfg.moduli = {4, 8};
  cfg.chunk = 16;
  cfg.jobs = 1;
  std::string serial = jsonl(map, cfg);
  for (unsigned jobs : {2u, 4u, 7u}) {
    cfg.jobs = jobs;
    CHECK(jsonl(map, cfg) == serial);
  }
  auto recs = collect(map, cfg);
  CHECK(recs.size() == primes_in_range(3, 3000).size());
  for (std::size_t i = 1; i < recs.size(); ++i)
    CHECK(recs[i - 1].p < recs[i].p);
}

TEST_CASE("cancellation leaves a prefix") {
  RationalMapQ map = parse_map("x^2+1");
  SweepConfig cfg;
  cfg.lo = 3;
  cfg.hi = 20000;
  cfg.jobs = 3;
  cfg.chunk = 8;
  std::atomic<bool> cancel{false};
  std::vector<std::uint64_t> seen;
  SweepOutcome out = run_sweep(
      map, cfg,
      [&](const SweepRecord &r) {
        seen.push_back(r.p);
        if (seen.size() == 50)
          cancel = true;
      },
      {}, &cancel);
  CHECK(out.cancelled);
  CHECK(out.emitted == seen.size());
  auto all = sweep_primes(cfg);
  REQUIRE(seen.size() < all.size());
  CHECK(std::equal(seen.begin(), seen.end(), all.begin()));
}

TEST_CASE("resume reproduces a fresh run byte for byte") {
  RationalMapQ map = parse_map("x^2-2");
  SweepConfig cfg;
  cfg.lo = 3;
  cfg.hi = 2000;
  cfg.jobs = 2;
  std::string fresh = jsonl(map, cfg);

  SUBCASE("after a clean stop") {
    TempFile f("clean");
    SweepConfig half = cfg;
    half.hi = 900;
    {
      std::ofstream out(f.path, std::ios::binary);
      RecordWriter w(out, RecordFormat::Json);
      run_sweep(map, half, [&](const SweepRecord &r) { w.write(r); });
    }
    resume_into(f.path, map, cfg);
    CHECK(slurp(f.path) == fresh);
    // A second resume has nothing left to do.
    resume_into(f.path, map, cfg);
    CHECK(slurp(f.path) == fresh);
  }

  SUBCASE("after a torn final line") {
    TempFile f("torn");
    std::size_t cut = fresh.find('\n', fresh.size() / 3) + 1;
    {
      std::ofstream out(f.path, std::ios::binary);
      out << fresh.substr(0, cut) << fresh.substr(cut, 25);
    }
    auto skip = prepare_resume(f.path, map_hash(map));
    CHECK(slurp(f.path) == fresh.substr(0, cut));
    CHECK(skip.size() == load_records(f.path).size());
    resume_into(f.path, map, cfg);
    CHECK(slurp(f.path) == fresh);
  }

  SUBCASE("records for other maps are kept and ignored") {
    TempFile f("mixed");
    SweepConfig small = cfg;
    small.hi = 100;
    std::string other = jsonl(parse_map("x^2+1"), small);
    {
      std::ofstream out(f.path, std::ios::binary);
      out << other;
    }
    auto skip = prepare_resume(f.path, map_hash(map));
    CHECK(skip.empty());
    resume_into(f.path, map, cfg);
    CHECK(slurp(f.path) == other + fresh);
  }

  CHECK(prepare_resume(fs::temp_directory_path() / "perdyn_missing_file",
                       map_hash(map))
            .empty());
}

TEST_CASE("JSON round trip and CSV shape") {
  RationalMapQ map = parse_map("(x^2+1)/x");
  SweepConfig cfg;
  cfg.lo = 2;
  cfg.hi = 200;
  cfg.moduli = {3, 4};
  for (const auto &r : collect(map, cfg)) {
    std::string line = record_to_json(r);
    CHECK(line.find('\n') == std::string::npos);
    SweepRecord back = record_from_json(line);
    CHECK(record_to_json(back) == line);
    CHECK(back.p == r.p);
    CHECK(back.proportion == r.proportion);
    CHECK(back.congruences == r.congruences);
    auto commas = [](const std::string &s) {
      return std::count(s.begin(), s.end(), ',');
    };
    CHECK(commas(record_to_csv(r)) == commas(csv_header()));
  }
  CHECK_THROWS_AS(record_from_json("{not json"), Error);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK(parse_format("csv") == RecordFormat::Csv);
  CHECK(map_hash(map).size() == 16);
  CHECK(map_hash(map) == map_hash(parse_map("(x^3+x)/(x^2)")));
  CHECK(map_hash(map) != map_hash(parse_map("x^2+1")));
}

TEST_CASE("summary invariants") {
  RationalMapQ map = parse_map("x^2+1");
  SweepConfig cfg;
  cfg.lo = 3;
  cfg.hi = 5000;
  cfg.moduli = {4};
  auto recs = collect(map, cfg);
  SweepSummary s = summarize(recs);
  CHECK(s.count == recs.size());
  CHECK(s.bad == 0);
  CHECK(s.min <= s.mean);
  CHECK(s.mean <= s.max);
  BigRational at_arg;
  for (const auto &r : recs)
    if (r.p == s.argmin)
      at_arg = r.proportion;
  CHECK(at_arg == s.min);
  for (std::size_t i = 1; i < s.liminf_trace.size(); ++i) {
    CHECK(s.liminf_trace[i - 1].first < s.liminf_trace[i].first);
    CHECK(s.liminf_trace[i - 1].second <= s.liminf_trace[i].second);
  }
  REQUIRE(!s.liminf_trace.empty());
  CHECK(s.liminf_trace.front().second == s.min);
  std::size_t total = 0;
  for (const auto &[key, st] : s.by_class) {
    CHECK(key.first == 4);
    CHECK(st.min <= st.mean);
    CHECK(st.mean <= st.max);
    total += st.count;
  }
  CHECK(total == s.count);
  CHECK_THROWS_AS(summarize({}), Error);
  std::ostringstream os;
  print_summary(os, s);
  CHECK(os.str().find(std::to_string(s.argmin)) != std::string::npos);
}

TEST_CASE("presets") {
  Preset pw = make_preset("powering-3");
  CHECK(pw.map == parse_map("x^3"));
  REQUIRE(pw.filters.size() == 1);
  CHECK(pw.filters[0].m == 27);
  CHECK(pw.filters[0].r == 1);
  CHECK(make_preset("powering-2", 2).filters[0].m == 4);
  CHECK(make_preset("chebyshev-2").map == parse_map("x^2-2"));
  CHECK(make_preset("chebyshev-odd-5").map == chebyshev(5));
  CHECK(make_preset("chebyshev-odd-9").map == chebyshev(9));
  CHECK(make_preset("chebyshev-composite").map == chebyshev(6));
  CHECK(make_preset("chebyshev-composite-10").map == chebyshev(10));
  CHECK(make_preset("unicritical-generic").map == parse_map("x^2+1"));
  CHECK(make_preset("lattes2--1-0").map == lattes2(-1, 0));
  CHECK(make_preset("lattes2-0-1").map == lattes2(0, 1));
  for (const char *bad :
       {"powering-1", "chebyshev-odd-6", "chebyshev-odd-15",
        "chebyshev-composite-9", "lattes2-0-0", "nonsense", "chebyshev-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(make_preset(bad), Error);
  }
  CHECK_FALSE(preset_names().empty());
}
