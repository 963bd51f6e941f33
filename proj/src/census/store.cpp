#include "perdyn/census/store.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "perdyn/error.hpp"

namespace perdyn {

using ordered_json = nlohmann::ordered_json;

RecordFormat parse_format(std::string_view name) {
  if (name == "json")
    return RecordFormat::Json;
  if (name == "csv")
    return RecordFormat::Csv;
  if (name == "table")
    return RecordFormat::Table;
  throw Error(ErrorCode::Domain,
              "unknown format '" + std::string(name) + "' (json|csv|table)");
}

namespace {

std::string join(const std::vector<std::uint64_t> &v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_congruences(const std::map<std::uint64_t, std::uint64_t> &c) {
  std::string s;
  for (const auto &[m, r] : c) {
    if (!s.empty())
      s += ';';
    s += std::to_string(m) + ":" + std::to_string(r);
  }
  return s;
}

std::string decimal_field(const SweepRecord &rec) {
  return rec.good_reduction ? decimal_string(rec.proportion, 6) : "";
}

std::string fraction_field(const SweepRecord &rec) {
  return rec.good_reduction ? fraction_string(rec.proportion) : "";
}

} // namespace

std::string record_to_json(const SweepRecord &rec) {
  ordered_json j;
  j["map_hash"] = rec.map_hash;
  j["map"] = rec.map;
  j["p"] = rec.p;
  j["good_reduction"] = rec.good_reduction;
  j["n_points"] = rec.n_points;
  if (rec.good_reduction) {
    j["n_periodic"] = rec.n_periodic;
    j["proportion"] = fraction_string(rec.proportion);
    j["proportion_decimal"] = decimal_string(rec.proportion, 6);
    j["image_sizes"] = rec.image_sizes;
    j["max_tail"] = rec.max_tail;
    j["max_cycle"] = rec.max_cycle;
  }
  ordered_json cong = ordered_json::object();
  for (const auto &[m, r] : rec.congruences)
    cong[std::to_string(m)] = r;
  j["congruences"] = cong;
  return j.dump();
}

SweepRecord record_from_json(std::string_view line) {
  SweepRecord rec;
  try {
    auto j = ordered_json::parse(line);
    rec.map_hash = j.at("map_hash").get<std::string>();
    rec.map = j.at("map").get<std::string>();
    rec.p = j.at("p").get<std::uint64_t>();
    rec.good_reduction = j.at("good_reduction").get<bool>();
    rec.n_points = j.at("n_points").get<std::uint64_t>();
    if (rec.good_reduction) {
      rec.n_periodic = j.at("n_periodic").get<std::uint64_t>();
      rec.proportion = parse_rational(j.at("proportion").get<std::string>());
      rec.image_sizes = j.at("image_sizes").get<std::vector<std::uint64_t>>();
      rec.max_tail = j.at("max_tail").get<std::uint32_t>();
      rec.max_cycle = j.at("max_cycle").get<std::uint32_t>();
    }
    for (const auto &[m, r] : j.at("congruences").items())
      rec.congruences[std::stoull(m)] = r.get<std::uint64_t>();
  } catch (const nlohmann::json::exception &e) {
    throw SyntaxError(0, std::string("bad record: ") + e.what());
  }
  return rec;
}

std::string csv_header() {
  return "map_hash,map,p,good_reduction,n_points,n_periodic,proportion,"
         "proportion_decimal,image_sizes,max_tail,max_cycle,congruences";
}

std::string record_to_csv(const SweepRecord &rec) {
  std::string quoted = "\"";
  for (char ch : rec.map) {
    if (ch == '"')
      quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  std::ostringstream os;
  os << rec.map_hash << ',' << quoted << ',' << rec.p << ','
     << (rec.good_reduction ? "true" : "false") << ',' << rec.n_points << ',';
  if (rec.good_reduction)
    os << rec.n_periodic;
  os << ',' << fraction_field(rec) << ',' << decimal_field(rec) << ','
     << join(rec.image_sizes, ';') << ',';
  if (rec.good_reduction)
    os << rec.max_tail << ',' << rec.max_cycle;
  else
    os << ',';
  os << ',' << join_congruences(rec.congruences);
  return os.str();
}

std::string table_header() {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%10s %4s %10s %20s %9s %8s %9s  %s", "p",
                "good", "n_periodic", "proportion", "decimal", "max_tail",
                "max_cycle", "image_sizes");
  return buf;
}

std::string record_to_table(const SweepRecord &rec) {
  char buf[160];
  if (!rec.good_reduction) {
    std::snprintf(buf, sizeof buf, "%10llu %4s",
                  static_cast<unsigned long long>(rec.p), "no");
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%10llu %4s %10llu %20s %9s %8u %9u  ",
                static_cast<unsigned long long>(rec.p), "yes",
                static_cast<unsigned long long>(rec.n_periodic),
                fraction_string(rec.proportion).c_str(),
                decimal_string(rec.proportion, 6).c_str(), rec.max_tail,
                rec.max_cycle);
  return buf + join(rec.image_sizes, ',');
}

std::vector<SweepRecord> load_records(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::vector<SweepRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    if (in.eof())
      break; // no trailing newline: partial write
    out.push_back(record_from_json(line));
  }
  return out;
}

std::set<std::uint64_t> prepare_resume(const std::filesystem::path &path,
                                       const std::string &hash) {
  std::set<std::uint64_t> done;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec))
    return done;
  std::string content;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  std::size_t keep = content.rfind('\n');
  keep = keep == std::string::npos ? 0 : keep + 1;
  std::size_t pos = 0;
  while (pos < keep) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line(content.data() + pos, eol - pos);
    pos = eol + 1;
    if (line.empty())
      continue;
    SweepRecord rec;
    try {
      rec = record_from_json(line);
    } catch (const Error &) {
      // A torn line in the middle cannot come from an ordered append.
      throw Error(ErrorCode::Io, path.string() + " holds a malformed record");
    }
    if (rec.map_hash == hash)
      done.insert(rec.p);
  }
  if (keep < content.size())
    std::filesystem::resize_file(path, keep);
  return done;
}

RecordWriter::RecordWriter(std::ostream &out, RecordFormat format, bool header)
    : out_(out), format_(format), need_header_(header) {}

void RecordWriter::write(const SweepRecord &rec) {
  if (need_header_) {
    if (format_ == RecordFormat::Csv)
      out_ << csv_header() << '\n';
    else if (format_ == RecordFormat::Table)
      out_ << table_header() << '\n';
    need_header_ = false;
  }
  switch (format_) {
  case RecordFormat::Json:
    out_ << record_to_json(rec) << '\n';
    break;
  case RecordFormat::Csv:
    out_ << record_to_csv(rec) << '\n';
    break;
  case RecordFormat::Table:
    out_ << record_to_table(rec) << '\n';
    break;
  }
}

void print_summary(std::ostream &out, const SweepSummary &s) {
  out << "primes: " << s.count << " good";
  if (s.bad)
    out << ", " << s.bad << " bad reduction (skipped)";
  out << '\n';
  out << "min:    " << fraction_string(s.min) << " ("
      << decimal_string(s.min, 6) << ") at p=" << s.argmin << '\n';
  out << "mean:   " << decimal_string(s.mean, 6) << '\n';
  out << "max:    " << fraction_string(s.max) << " ("
      << decimal_string(s.max, 6) << ")\n";
  if (!s.liminf_trace.empty()) {
    // Sample the trace at roughly ten evenly spaced points.
    out << "running liminf (min over p >= x):\n";
    const std::size_t n = s.liminf_trace.size();
    const std::size_t step = std::max<std::size_t>(1, n / 10);
    for (std::size_t i = 0; i < n; i += step)
      out << "  x=" << std::setw(10) << s.liminf_trace[i].first << "  "
          << decimal_string(s.liminf_trace[i].second, 6) << '\n';
  }
  if (!s.by_class.empty()) {
    out << "by class:\n";
    for (const auto &[key, cs] : s.by_class)
      out << "  p=" << key.second << " mod " << key.first << ": n=" << cs.count
          << " min=" << decimal_string(cs.min, 6)
          << " mean=" << decimal_string(cs.mean, 6)
          << " max=" << decimal_string(cs.max, 6) << '\n';
  }
}

} // namespace perdyn
