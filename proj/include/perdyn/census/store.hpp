#ifndef PERDYN_CENSUS_STORE_HPP
#define PERDYN_CENSUS_STORE_HPP

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "perdyn/census/sweep.hpp"

namespace perdyn {

enum class RecordFormat { Json, Csv, Table };

/// "json" | "csv" | "table"; throws Domain otherwise.
RecordFormat parse_format(std::string_view name);

/// One JSON-lines record, no trailing newline. Rationals are "num/den".
std::string record_to_json(const SweepRecord &rec);
/// Inverse of record_to_json; throws Syntax on malformed lines.
SweepRecord record_from_json(std::string_view line);

std::string csv_header();
std::string record_to_csv(const SweepRecord &rec);

/// Fixed-width text row; table_header() matches its columns.
std::string table_header();
std::string record_to_table(const SweepRecord &rec);

/// Reads every complete record of a JSON-lines file.
std::vector<SweepRecord> load_records(const std::filesystem::path &path);

/// Prepares path for appending: drops a trailing partial line left by an
/// interrupted run and returns the primes already stored for this map hash.
/// A missing file yields an empty set.
std::set<std::uint64_t> prepare_resume(const std::filesystem::path &path,
                                       const std::string &hash);

/// Writes records in the chosen format; the header (csv, table) is emitted
/// before the first record unless suppressed.
class RecordWriter {
public:
  RecordWriter(std::ostream &out, RecordFormat format, bool header = true);
  void write(const SweepRecord &rec);

private:
  std::ostream &out_;
  RecordFormat format_;
  bool need_header_;
};

void print_summary(std::ostream &out, const SweepSummary &s);

} // namespace perdyn

#endif
