#include "negmono/dataset.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "negmono/error.hpp"

namespace negmono {

namespace {

constexpr const char* kBaseColumns[] = {"source", "seed", "n_ac_sq", "n_ab_sq", "n_abc_sq"};
constexpr const char* kConcurrenceColumns[] = {"c_ac_sq", "c_ab_sq", "c_abc_sq"};

bool has_concurrence(const std::vector<SampleRecord>& records) {
  if (records.empty()) return false;
  const bool first = records.front().concurrence.has_value();
  for (const auto& r : records) {
    if (r.concurrence.has_value() != first) {
      throw Error(ErrorKind::InvalidArgument,
                  "records mix entries with and without concurrence values");
    }
  }
  return first;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path.string() + "' failed");
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(std::move(line));
  }
  return out;
}

double parse_double(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    throw Error(ErrorKind::IoError, "malformed number '" + s + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE ||
      !std::isdigit(static_cast<unsigned char>(s.front()))) {
    throw Error(ErrorKind::IoError, "malformed seed '" + s + "'");
  }
  return v;
}

}  // namespace

DatasetFormat parse_dataset_format(std::string_view name) {
  if (name == "csv") return DatasetFormat::Csv;
  if (name == "json") return DatasetFormat::Json;
  throw Error(ErrorKind::UnknownName, "unknown format '" + std::string(name) + "'");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit_dataset(const std::vector<SampleRecord>& records, const std::filesystem::path& path,
                  DatasetFormat format) {
  const bool conc = has_concurrence(records);
  std::ofstream out = open_out(path);
  if (format == DatasetFormat::Json) {
    // Numbers go through format_double so the JSON matches the CSV digits.
    out << '[';
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      out << (i ? ",\n " : "\n ") << "{\"source\": \"" << to_string(r.source)
          << "\", \"seed\": " << r.seed << ", \"n_ac_sq\": " << format_double(r.triple.n_ac_sq)
          << ", \"n_ab_sq\": " << format_double(r.triple.n_ab_sq)
          << ", \"n_abc_sq\": " << format_double(r.triple.n_abc_sq);
      if (conc) {
        out << ", \"c_ac_sq\": " << format_double(r.concurrence->c_ac_sq)
            << ", \"c_ab_sq\": " << format_double(r.concurrence->c_ab_sq)
            << ", \"c_abc_sq\": " << format_double(r.concurrence->c_abc_sq);
      }
      out << '}';
    }
    out << (records.empty() ? "]\n" : "\n]\n");
    finish(out, path);
    return;
  }

  bool first = true;
  for (const char* col : kBaseColumns) {
    out << (first ? "" : ",") << col;
    first = false;
  }
  if (conc) {
    for (const char* col : kConcurrenceColumns) out << ',' << col;
  }
  out << '\n';
  for (const auto& r : records) {
    out << to_string(r.source) << ',' << r.seed << ',' << format_double(r.triple.n_ac_sq) << ','
        << format_double(r.triple.n_ab_sq) << ',' << format_double(r.triple.n_abc_sq);
    if (conc) {
      out << ',' << format_double(r.concurrence->c_ac_sq) << ','
          << format_double(r.concurrence->c_ab_sq) << ','
          << format_double(r.concurrence->c_abc_sq);
    }
    out << '\n';
  }
  finish(out, path);
}

std::vector<SampleRecord> read_dataset(const std::filesystem::path& path, DatasetFormat format) {
  const std::string text = slurp(path);
  std::vector<SampleRecord> out;
  if (format == DatasetFormat::Json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::IoError, "malformed JSON in '" + path.string() + "': " + e.what());
    }
    if (!doc.is_array()) throw Error(ErrorKind::IoError, "dataset JSON must be an array");
    try {
      for (const auto& obj : doc) {
        SampleRecord r;
        r.source = parse_sample_source(obj.at("source").get<std::string>());
        r.seed = obj.at("seed").get<std::uint64_t>();
        r.triple = {obj.at("n_ac_sq").get<double>(), obj.at("n_ab_sq").get<double>(),
                    obj.at("n_abc_sq").get<double>()};
        if (obj.contains("c_ac_sq")) {
          r.concurrence = ConcurrenceTriple{obj.at("c_ac_sq").get<double>(),
                                            obj.at("c_ab_sq").get<double>(),
                                            obj.at("c_abc_sq").get<double>()};
        }
        out.push_back(std::move(r));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::IoError, "malformed record in '" + path.string() + "': " + e.what());
    }
    return out;
  }

  const auto lines = lines_of(text);
  if (lines.empty()) throw Error(ErrorKind::IoError, "'" + path.string() + "' has no header");
  const auto header = split(lines.front(), ',');
  const bool conc = header.size() == 8;
  if (header.size() != 5 && !conc) {
    throw Error(ErrorKind::IoError, "unexpected dataset header in '" + path.string() + "'");
  }
  for (std::size_t i = 0; i < 5; ++i) {
    if (header[i] != kBaseColumns[i]) {
      throw Error(ErrorKind::IoError, "unexpected column '" + header[i] + "'");
    }
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != header.size()) {
      throw Error(ErrorKind::IoError, "row " + std::to_string(i) + " has the wrong field count");
    }
    SampleRecord r;
    try {
      r.source = parse_sample_source(f[0]);
    } catch (const Error& e) {
      throw Error(ErrorKind::IoError, e.what());
    }
    r.seed = parse_u64(f[1]);
    r.triple = {parse_double(f[2]), parse_double(f[3]), parse_double(f[4])};
    if (conc) r.concurrence = ConcurrenceTriple{parse_double(f[5]), parse_double(f[6]), parse_double(f[7])};
    out.push_back(std::move(r));
  }
  return out;
}

void write_table_csv(const Table& table, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw Error(ErrorKind::InvalidArgument, "table row width does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  finish(out, path);
}

Table read_table_csv(const std::filesystem::path& path) {
  const auto lines = lines_of(slurp(path));
  if (lines.empty()) throw Error(ErrorKind::IoError, "'" + path.string() + "' has no header");
  Table t;
  t.columns = split(lines.front(), ',');
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != t.columns.size()) {
      throw Error(ErrorKind::IoError, "row " + std::to_string(i) + " has the wrong field count");
    }
    std::vector<double> row;
    row.reserve(f.size());
    for (const auto& s : f) row.push_back(parse_double(s));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace negmono
