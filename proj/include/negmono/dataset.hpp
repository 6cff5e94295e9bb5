#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "negmono/explorer.hpp"

namespace negmono {

enum class DatasetFormat { Csv, Json };

DatasetFormat parse_dataset_format(std::string_view name);

/// Shortest text that round-trips the double ("%.17g").
std::string format_double(double x);

/// CSV columns: source,seed,n_ac_sq,n_ab_sq,n_abc_sq, followed by
/// c_ac_sq,c_ab_sq,c_abc_sq when the records carry concurrences (all or
/// none of them must). JSON is an array of objects with the same keys.
/// LF line endings; an empty list yields a header-only CSV or "[]".
/// Throws IoError when the file cannot be written.
void emit_dataset(const std::vector<SampleRecord>& records, const std::filesystem::path& path,
                  DatasetFormat format);

/// Inverse of emit_dataset. Throws IoError on unreadable or malformed files.
std::vector<SampleRecord> read_dataset(const std::filesystem::path& path, DatasetFormat format);

/// Plain numeric table: a header line then one row per entry, values
/// written with format_double.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table_csv(const Table& table, const std::filesystem::path& path);
Table read_table_csv(const std::filesystem::path& path);

}  // namespace negmono
