#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "perdyn/algebra/ddf.hpp"
#include "perdyn/bounds/chebotarev.hpp"
#include "perdyn/census/presets.hpp"
#include "perdyn/census/sieve.hpp"
#include "perdyn/census/store.hpp"
#include "perdyn/census/sweep.hpp"
#include "perdyn/crit/critical.hpp"
#include "perdyn/error.hpp"
#include "perdyn/frob/sampler.hpp"
#include "perdyn/map/rational_map.hpp"
#include "perdyn/wreath/spectrum.hpp"

using namespace perdyn;
using ordered_json = nlohmann::ordered_json;

namespace {

std::atomic<bool> g_cancel{false};

extern "C" void on_signal(int) { g_cancel.store(true); }

struct SweepOptions {
  std::string map;
  std::string primes;
  std::vector<std::string> mods;
  std::vector<std::uint64_t> annotate;
  int nmax = 5;
  std::string out;
  std::string format = "json";
  bool resume = false;
  unsigned jobs = 0;
  bool quiet = false;
};

void add_sweep_flags(CLI::App *cmd, SweepOptions &o) {
  cmd->add_option("--primes", o.primes, "prime range A..B");
  cmd->add_option("--mod", o.mods, "filter p = r (mod m), given as m:r")
      ->take_all();
  cmd->add_option("--annotate", o.annotate, "also record p mod m")->take_all();
  cmd->add_option("--nmax", o.nmax, "image sizes for k = 1..nmax")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--out", o.out, "results file (JSON lines)");
  cmd->add_option("--format", o.format, "json|csv|table");
  cmd->add_flag("--resume", o.resume, "append only primes missing from --out");
  cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  cmd->add_flag("--quiet", o.quiet, "no summary");
}

// Records go to --out or stdout; commentary goes wherever records do not,
// except that a table on stdout keeps everything together.
int execute_sweep(const RationalMapQ &map, SweepConfig config,
                  const SweepOptions &o,
                  const std::vector<std::string> &notes) {
  const RecordFormat format = parse_format(o.format);
  if (o.resume && (o.out.empty() || format != RecordFormat::Json))
    throw Error(ErrorCode::Domain, "--resume needs --out with --format json");
  for (const auto &m : o.mods)
    config.filters.push_back(parse_congruence(m));
  config.moduli = o.annotate;
  config.n_max = o.nmax;
  config.jobs = o.jobs;

  std::ostream &meta =
      (!o.out.empty() || format == RecordFormat::Table) ? std::cout : std::cerr;
  for (const auto &line : notes)
    meta << "# " << line << '\n';

  const std::string hash = map_hash(map);
  std::set<std::uint64_t> skip;
  std::vector<SweepRecord> all;
  std::unique_ptr<std::ofstream> file;
  if (!o.out.empty()) {
    if (o.resume) {
      skip = prepare_resume(o.out, hash);
      for (auto &rec : load_records(o.out))
        if (rec.map_hash == hash)
          all.push_back(std::move(rec));
    }
    file = std::make_unique<std::ofstream>(o.out, o.resume ? std::ios::app
                                                           : std::ios::trunc);
    if (!*file)
      throw Error(ErrorCode::Io, "cannot open " + o.out);
  }
  std::ostream &sink_stream = file ? *file : std::cout;
  RecordWriter writer(sink_stream, format);

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  SweepOutcome outcome = run_sweep(
      map, config,
      [&](const SweepRecord &rec) {
        writer.write(rec);
        all.push_back(rec);
      },
      skip, &g_cancel);
  sink_stream.flush();

  if (outcome.candidates == 0) {
    meta << "# no primes in [" << config.lo << ", " << config.hi
         << "] pass the filters; empty result\n";
    return 0;
  }
  if (outcome.skipped)
    meta << "# resume: " << outcome.skipped << " primes already stored\n";
  if (outcome.cancelled) {
    meta << "# cancelled after " << outcome.emitted
         << " records; rerun with --resume to continue\n";
    return 130;
  }
  if (!o.quiet) {
    bool any_good = false;
    for (const auto &r : all)
      any_good = any_good || r.good_reduction;
    if (any_good) {
      std::ostringstream ss;
      print_summary(ss, summarize(all));
      std::istringstream in(ss.str());
      for (std::string line; std::getline(in, line);)
        meta << "# " << line << '\n';
    } else {
      meta << "# no prime of good reduction in range\n";
    }
  }
  return 0;
}

std::string decimal(const BigRational &q) { return decimal_string(q, 6); }

BigInt parse_integer(const std::string &text, const char *what) {
  BigRational v = parse_rational(text);
  if (v.get_den() != 1)
    throw Error(ErrorCode::Domain, std::string(what) + " must be an integer");
  return v.get_num();
}

int cmd_fpp(const std::string &spec_text, int n, const std::string &format,
            bool distribution) {
  FixedPointSpectrum spec = parse_spectrum(spec_text);
  if (n < 1)
    throw Error(ErrorCode::Domain, "n must be >= 1");
  ordered_json rows = ordered_json::array();
  bool exact = true;
  std::vector<BigRational> values;
  std::vector<FppInterval> enclosure;
  try {
    values = iterate_fpp(spec, n);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::Resource)
      throw;
    exact = false;
    enclosure = iterate_fpp_enclosure(spec, n);
  }
  for (int m = 1; m <= n; ++m) {
    ordered_json row;
    row["n"] = m;
    if (exact) {
      row["fpp"] = fraction_string(values[m - 1]);
      row["decimal"] = decimal(values[m - 1]);
    } else {
      row["lo"] = decimal_string(enclosure[m - 1].lo, 12);
      row["hi"] = decimal_string(enclosure[m - 1].hi, 12);
    }
    rows.push_back(row);
  }
  if (format == "json") {
    ordered_json j;
    j["group"] = spec.to_string();
    j["order"] = spec.order().get_str();
    j["transitive"] = spec.transitive();
    j["exact"] = exact;
    j["values"] = rows;
    if (distribution) {
      PolyQ g = fix_distribution(spec, n);
      ordered_json dist = ordered_json::object();
      for (int k = 0; k <= g.degree(); ++k)
        if (g.coeff(k) != 0)
          dist[std::to_string(k)] = fraction_string(g.coeff(k));
      j["fixed_point_distribution"] = dist;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "group " << spec.to_string() << "  order " << spec.order()
            << (spec.transitive() ? "  transitive" : "  intransitive") << '\n';
  if (exact) {
    std::printf("%6s  %-40s  %s\n", "n", "FPP([G]^n)", "decimal");
    for (int m = 1; m <= n; ++m) {
      std::string frac = fraction_string(values[m - 1]);
      if (frac.size() > 40)
        frac = "(" + std::to_string(frac.size()) + " digits)";
      std::printf("%6d  %-40s  %s\n", m, frac.c_str(),
                  decimal(values[m - 1]).c_str());
    }
  } else {
    std::printf("%6s  %-16s  %-16s\n", "n", "lower", "upper");
    for (int m = 1; m <= n; ++m)
      std::printf("%6d  %-16s  %-16s\n", m,
                  decimal_string(enclosure[m - 1].lo, 12).c_str(),
                  decimal_string(enclosure[m - 1].hi, 12).c_str());
  }
  if (distribution) {
    PolyQ g = fix_distribution(spec, n);
    std::cout << "P(exactly k fixed leaves) at n=" << n << ":\n";
    for (int k = 0; k <= g.degree(); ++k)
      if (g.coeff(k) != 0)
        std::printf("%6d  %-40s  %s\n", k, fraction_string(g.coeff(k)).c_str(),
                    decimal(g.coeff(k)).c_str());
  }
  return 0;
}

struct BoundsOptions {
  std::string q, genus, ratio = "1", order = "1", ramified = "0", fpp, delta;
  int n = 0, d = 2;
  std::string term = "plain";
  std::string format = "table";
};

int cmd_bounds(const BoundsOptions &o) {
  BoundInputs in;
  in.q = parse_integer(o.q, "--q");
  in.ratio = parse_rational(o.ratio);
  in.order = parse_integer(o.order, "--order");
  in.ramified = parse_integer(o.ramified, "--ramified");
  in.n = o.n;
  in.d = o.d;
  bool genus_derived = o.genus.empty();
  in.genus = genus_derived ? genus_bound(in.order, o.n, o.d)
                           : parse_integer(o.genus, "--genus");
  if (!o.fpp.empty())
    in.fpp = parse_spectrum(o.fpp).fpp();
  ErrorTerm term;
  if (o.term == "plain")
    term = ErrorTerm::Plain;
  else if (o.term == "sqrtq")
    term = ErrorTerm::SqrtQ;
  else
    throw Error(ErrorCode::Domain, "--term must be plain or sqrtq");
  Interval iv = ms_interval(in, term);

  std::optional<BigRational> bound;
  std::optional<BigRational> fpp_n;
  if (!o.fpp.empty()) {
    FixedPointSpectrum spec = parse_spectrum(o.fpp);
    if (o.n < 1)
      throw Error(ErrorCode::Domain, "--fpp needs --n >= 1");
    fpp_n = iterate_fpp(spec, o.n).back();
    bound = proportion_bound(in.q, *fpp_n, in.order, in.genus, in.ramified);
  }
  std::optional<BigInt> min_q;
  if (!o.delta.empty())
    min_q =
        min_prime_for(parse_rational(o.delta), in.order, in.genus, in.ramified);

  if (o.format == "json") {
    ordered_json j;
    j["q"] = in.q.get_str();
    j["genus"] = in.genus.get_str();
    j["genus_derived"] = genus_derived;
    j["ratio"] = fraction_string(in.ratio);
    j["order"] = in.order.get_str();
    j["ramified"] = in.ramified.get_str();
    j["term"] = o.term;
    j["interval"] = {fraction_string(iv.lo), fraction_string(iv.hi)};
    if (bound) {
      j["fpp"] = fraction_string(*fpp_n);
      j["proportion_bound"] = fraction_string(*bound);
      j["vacuous"] = is_vacuous(*bound);
    }
    if (min_q)
      j["min_q"] = min_q->get_str();
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "q=" << in.q << " genus=" << in.genus
            << (genus_derived ? " (bound)" : "")
            << " ratio=" << to_string(in.ratio) << " order=" << in.order
            << " #R=" << in.ramified << '\n';
  std::cout << "degree-one places with Frobenius in C: [" << to_string(iv.lo)
            << ", " << to_string(iv.hi) << "]  ~ [" << decimal(iv.lo) << ", "
            << decimal(iv.hi) << "]  (" << o.term << ")\n";
  if (bound) {
    std::cout << "FPP([G]^" << o.n << ") = " << to_string(*fpp_n) << '\n';
    std::cout << "proportion bound: " << to_string(*bound) << " ~ "
              << decimal(*bound) << (is_vacuous(*bound) ? "  (vacuous)" : "")
              << '\n';
  }
  if (min_q)
    std::cout << "error term <= delta once q >= " << *min_q << '\n';
  return 0;
}

int cmd_disc(const std::string &expr, int n) {
  RationalMapQ map = parse_map(expr);
  DiscriminantReport rep = discriminant_iterate(map, n);
  std::cout << "map " << map.render() << "  n=" << n << '\n';
  std::cout << "resultant:   " << rep.resultant.to_string() << '\n';
  std::cout << "constant:    " << to_string(rep.constant) << '\n';
  std::cout << "monic:       " << rep.monic.to_string() << '\n';
  if (rep.product_form) {
    std::cout << "product:     " << rep.product_form->to_string() << '\n';
    std::cout << "proportional: " << (rep.proportional ? "yes" : "no");
    if (rep.ratio)
      std::cout << " (ratio " << to_string(*rep.ratio) << ")";
    std::cout << '\n';
  } else {
    std::cout << "product:     unavailable (irrational critical points)\n";
  }
  RamifiedReport ram = ramified_primes(map, n);
  std::cout << "ramified t-values:\n";
  for (const auto &v : ram.values)
    std::cout << "  t=" << to_string(v.value) << "  exponent " << v.exponent
              << '\n';
  if (ram.irrational_residual)
    std::cout << "  plus orbits of the roots of "
              << ram.irrational_residual->to_string() << '\n';
  return 0;
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

int cmd_collide(const std::string &expr, int depth, const std::string &points,
                const std::string &primes, const std::string &preperiodic,
                int degree) {
  if (!preperiodic.empty()) {
    BigRational c = parse_rational(preperiodic);
    bool pre = preperiodic_unicritical(degree, c);
    std::cout << "0 under x^" << degree << " + (" << to_string(c)
              << "): " << (pre ? "preperiodic" : "not preperiodic") << '\n';
    if (expr.empty())
      return 0;
  }
  if (expr.empty())
    throw Error(ErrorCode::Domain, "--map is required");
  RationalMapQ map = parse_map(expr);
  std::cout << "map " << map.render() << '\n';
  auto crit = critical_points(map);
  std::cout << "critical points:";
  for (const auto &c : crit)
    std::cout << ' ' << c.to_string();
  std::cout << '\n';

  bool irrational = false;
  for (const auto &c : crit)
    irrational = irrational || c.kind == CriticalPoint::Kind::Irrational;

  if (!points.empty() || !irrational) {
    std::vector<ProjQ> tracked;
    if (points.empty()) {
      tracked = rational_critical_points(map, false);
    } else {
      for (const auto &tok : split_list(points))
        tracked.push_back(tok == "inf" ? ProjQ::infinity()
                                       : ProjQ::at(parse_rational(tok)));
    }
    CriticalOrbitReport rep = collision_test(map, depth, tracked);
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      std::cout << "  " << rep.points[i].to_string() << " ->";
      for (const auto &v : rep.orbits[i])
        std::cout << ' ' << v.to_string();
      std::cout << '\n';
    }
    if (rep.holds) {
      std::cout << "holds to depth " << depth << '\n';
    } else {
      const Collision &c = *rep.first_violation;
      std::cout << "violation (" << c.a + 1 << "," << c.m << "," << c.b + 1
                << "," << c.n << "): phi^" << c.m << "("
                << rep.points[c.a].to_string() << ") = phi^" << c.n << "("
                << rep.points[c.b].to_string() << ") = " << c.value.to_string()
                << '\n';
    }
    return 0;
  }
  std::vector<std::uint64_t> ps;
  for (const auto &tok : split_list(primes.empty() ? "5,7,11,13" : primes))
    ps.push_back(std::stoull(tok));
  ModCollisionVerdict v = collision_test_mod(map, depth, ps);
  std::cout << v.summary() << '\n' << v.caveat << '\n';
  return 0;
}

int cmd_frob(const std::string &expr, std::uint64_t p, int n,
             std::optional<std::uint64_t> a,
             std::optional<std::uint64_t> sample, std::uint64_t seed,
             std::string group) {
  RationalMapQ map = parse_map(expr);
  if (!is_prime(p))
    throw Error(ErrorCode::Domain, std::to_string(p) + " is not prime");
  if (a) {
    CycleTypeSample s = frobenius_cycle_type(map, p, n, *a);
    std::cout << "a=" << s.a << ": ";
    if (s.ramified) {
      std::cout << "ramified"
                << (s.degree_dropped ? " (infinity in fiber)" : "") << '\n';
      return 0;
    }
    std::cout << "factor degrees";
    for (const auto &[deg, cnt] : s.degrees)
      std::cout << ' ' << deg << "^" << cnt;
    std::cout << "  (" << s.linear_count << " roots)\n";
    return 0;
  }
  SampleMode mode;
  mode.sample_size = sample;
  mode.seed = seed;
  FrobReport rep = empirical_fpp(map, p, n, mode);
  std::cout << "map " << map.render() << "  p=" << p << "  n=" << n
            << (rep.exhaustive ? "  exhaustive" : "  sampled") << '\n';
  std::cout << "examined " << rep.examined << "  ramified " << rep.ramified
            << "  unramified " << rep.unramified << "  root-bearing "
            << rep.root_bearing << '\n';
  std::cout << "empirical FPP " << to_string(rep.empirical_fpp) << " ~ "
            << decimal(rep.empirical_fpp) << '\n';
  std::cout << "affine image fraction " << to_string(rep.affine_image_fraction)
            << '\n';
  if (rep.image_proportion)
    std::cout << "#phi^n(P^1)/(p+1) " << to_string(*rep.image_proportion)
              << " ~ " << decimal(*rep.image_proportion) << '\n';
  std::cout << "agreement slack (#R+2)/p " << decimal(rep.agreement_slack)
            << '\n';
  if (group.empty())
    group = "S:" + std::to_string(map.degree());
  PredictionComparison cmp = compare_to_prediction(rep, parse_spectrum(group));
  std::cout << "predicted FPP([" << group << "]^" << n << ") "
            << decimal(cmp.predicted_fpp) << "  total variation "
            << decimal(cmp.total_variation) << '\n';
  std::printf("%6s  %10s  %10s\n", "roots", "empirical", "predicted");
  std::set<int> keys;
  for (const auto &kv : cmp.empirical)
    keys.insert(kv.first);
  for (const auto &kv : cmp.predicted)
    keys.insert(kv.first);
  for (int k : keys) {
    auto e = cmp.empirical.count(k) ? cmp.empirical.at(k) : BigRational(0);
    auto q = cmp.predicted.count(k) ? cmp.predicted.at(k) : BigRational(0);
    std::printf("%6d  %10s  %10s\n", k, decimal(e).c_str(), decimal(q).c_str());
  }
  for (const auto &w : rep.warnings)
    std::cerr << "warning: " << w << '\n';
  return 0;
}

int cmd_factor(const std::string &expr, std::uint64_t p) {
  if (!is_prime(p))
    throw Error(ErrorCode::Domain, std::to_string(p) + " is not prime");
  auto [num, den] = parse_rational_function(expr);
  if (den.degree() != 0)
    throw Error(ErrorCode::Domain, "factor expects a polynomial");
  PolyFp f = PolyFp::reduce(num * (BigRational(1) / den.coeff(0)), p);
  if (f.degree() < 1)
    throw Error(ErrorCode::DegenerateInput, "polynomial is constant mod p");
  std::cout << f.to_string() << " over F_" << p << '\n';
  std::cout << "distinct roots: " << count_distinct_roots(f) << '\n';
  if (!is_squarefree(f)) {
    std::cout << "not squarefree; gcd with derivative: "
              << gcd(f, f.derivative()).to_string() << '\n';
    return 0;
  }
  std::cout << "irreducible factor degrees:";
  for (const auto &[deg, cnt] : distinct_degree_factor(f))
    std::cout << ' ' << deg << "^" << cnt;
  std::cout << '\n';
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Periodic-point censuses of rational maps over finite fields"};
  app.require_subcommand(1);

  SweepOptions sweep_opts;
  auto *sweep = app.add_subcommand("sweep", "census over a prime range");
  sweep->add_option("--map", sweep_opts.map, "rational map in x")->required();
  add_sweep_flags(sweep, sweep_opts);

  SweepOptions preset_opts;
  std::string preset_name;
  int preset_r = 3;
  bool list_presets = false;
  auto *preset = app.add_subcommand("preset", "predefined experiment");
  preset->add_option("name", preset_name, "preset name");
  preset->add_option("--r", preset_r, "exponent for powering presets")
      ->check(CLI::Range(1, 40));
  preset->add_flag("--list", list_presets, "list preset names");
  add_sweep_flags(preset, preset_opts);

  std::string fpp_spec, fpp_format = "table";
  int fpp_n = 1;
  bool fpp_dist = false;
  auto *fpp = app.add_subcommand("fpp", "fixed-point proportion of [G]^n");
  fpp->add_option("group", fpp_spec, "S:d, C:d or d=..;k:c,..")->required();
  fpp->add_option("n", fpp_n, "iterate depth")->required();
  fpp->add_option("--format", fpp_format, "table|json");
  fpp->add_flag("--distribution", fpp_dist, "fixed-leaf distribution at n");

  BoundsOptions bo;
  auto *bounds = app.add_subcommand("bounds", "effective Chebotarev estimates");
  bounds->add_option("--q", bo.q, "residue field size")->required();
  bounds->add_option("--genus", bo.genus,
                     "genus (default: bound from order, n, d)");
  bounds->add_option("--ratio", bo.ratio, "#C/#G");
  bounds->add_option("--order", bo.order, "#G_n");
  bounds->add_option("--ramified", bo.ramified, "#R");
  bounds->add_option("--n", bo.n, "iterate");
  bounds->add_option("--d", bo.d, "degree");
  bounds->add_option("--fpp", bo.fpp, "group spectrum, e.g. S:2");
  bounds->add_option("--delta", bo.delta, "target error");
  bounds->add_option("--term", bo.term, "plain|sqrtq");
  bounds->add_option("--format", bo.format, "table|json");

  std::string disc_map;
  int disc_n = 1;
  auto *disc = app.add_subcommand("disc", "discriminant of phi^n(x) - t");
  disc->add_option("--map", disc_map, "rational map in x")->required();
  disc->add_option("--n", disc_n, "iterate")->check(CLI::Range(1, 6));

  std::string col_map, col_points, col_primes, col_pre;
  int col_depth = 8, col_degree = 2;
  auto *collide = app.add_subcommand("collide", "critical orbit collisions");
  collide->add_option("--map", col_map, "rational map in x");
  collide->add_option("--depth", col_depth, "largest iterate compared")
      ->check(CLI::Range(1, 64));
  collide->add_option("--points", col_points, "comma list of points or inf");
  collide->add_option("--mod-primes", col_primes,
                      "primes for the modular test");
  collide->add_option("--preperiodic", col_pre,
                      "c: is 0 preperiodic for x^d+c");
  collide->add_option("--degree", col_degree, "d for --preperiodic");

  std::string frob_map, frob_group;
  std::uint64_t frob_p = 0, frob_seed = 0x5eed;
  int frob_n = 1;
  std::optional<std::uint64_t> frob_a, frob_sample;
  auto *frob =
      app.add_subcommand("frob", "Frobenius cycle types in a fiber family");
  frob->add_option("--map", frob_map, "rational map in x")->required();
  frob->add_option("--p", frob_p, "prime")->required();
  frob->add_option("--n", frob_n, "iterate")->check(CLI::Range(0, 12));
  frob->add_option("--a", frob_a, "single specialization");
  frob->add_option("--sample", frob_sample, "random sample size");
  frob->add_option("--seed", frob_seed, "sampling seed");
  frob->add_option("--group", frob_group, "prediction group (default S:d)");

  std::string factor_poly;
  std::uint64_t factor_p = 0;
  auto *factor =
      app.add_subcommand("factor", "distinct-degree factorization mod p");
  factor->add_option("poly", factor_poly, "polynomial in x")->required();
  factor->add_option("--p", factor_p, "prime")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      RationalMapQ map = parse_map(sweep_opts.map);
      SweepConfig cfg;
      if (!sweep_opts.primes.empty())
        std::tie(cfg.lo, cfg.hi) = parse_prime_range(sweep_opts.primes);
      return execute_sweep(map, cfg, sweep_opts, {"map " + map.render()});
    }
    if (preset->parsed()) {
      if (list_presets || preset_name.empty()) {
        for (const auto &n : preset_names())
          std::cout << n << '\n';
        return 0;
      }
      Preset pr = make_preset(preset_name, preset_r);
      SweepConfig cfg;
      cfg.lo = pr.lo;
      cfg.hi = pr.hi;
      if (!preset_opts.primes.empty())
        std::tie(cfg.lo, cfg.hi) = parse_prime_range(preset_opts.primes);
      cfg.filters = pr.filters;
      std::vector<std::string> notes{"preset " + pr.name,
                                     "map " + pr.map.render()};
      for (const auto &f : pr.filters)
        notes.push_back("filter p = " + std::to_string(f.r) + " mod " +
                        std::to_string(f.m));
      notes.push_back("expected: " + pr.annotation);
      notes.push_back("source: " + pr.source);
      return execute_sweep(pr.map, cfg, preset_opts, notes);
    }
    if (fpp->parsed())
      return cmd_fpp(fpp_spec, fpp_n, fpp_format, fpp_dist);
    if (bounds->parsed())
      return cmd_bounds(bo);
    if (disc->parsed())
      return cmd_disc(disc_map, disc_n);
    if (collide->parsed())
      return cmd_collide(col_map, col_depth, col_points, col_primes, col_pre,
                         col_degree);
    if (frob->parsed())
      return cmd_frob(frob_map, frob_p, frob_n, frob_a, frob_sample, frob_seed,
                      frob_group);
    if (factor->parsed())
      return cmd_factor(factor_poly, factor_p);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Syntax || e.code() == ErrorCode::UnknownPreset
               ? 2
               : 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
