#pragma once

// CSV and JSON-lines writers for sweep tables.
//
// Floats are written in shortest round-trip form, so a table written, parsed
// and written again is byte-identical.

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mdi/measures.hpp"
#include "mdi/states.hpp"
#include "mdi/sweep.hpp"

namespace mdi {

enum class OutputFormat { csv, json_lines };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json" || s == "jsonl" || s == "json-lines") return OutputFormat::json_lines;
  throw std::invalid_argument("unknown output format '" + std::string(s) + "' (csv, jsonl)");
}

/// Streams records as they arrive; header is written on construction.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, std::vector<std::string> columns, OutputFormat format)
      : out_(out), columns_(std::move(columns)), format_(format) {
    if (format_ == OutputFormat::csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
    }
  }

  void write(std::span<const double> values) {
    if (values.size() != columns_.size())
      throw std::invalid_argument("RecordWriter: record has " + std::to_string(values.size()) + " fields, expected " +
                                  std::to_string(columns_.size()));
    if (format_ == OutputFormat::csv) {
      for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
    } else {
      out_ << '{';
      for (std::size_t i = 0; i < values.size(); ++i)
        out_ << (i ? "," : "") << '"' << columns_[i] << "\":" << format_double(values[i]);
      out_ << '}';
    }
    out_ << '\n';
  }

  void write(const SweepRecord& r) { write(std::span<const double>(r.values)); }

 private:
  std::ostream& out_;
  std::vector<std::string> columns_;
  OutputFormat format_;
};

inline void write_table(std::ostream& out, const SweepTable& table, OutputFormat format) {
  RecordWriter w(out, table.columns, format);
  for (const auto& r : table.records) w.write(r);
}

inline std::string to_string(const SweepTable& table, OutputFormat format) {
  std::ostringstream os;
  write_table(os, table, format);
  return os.str();
}

/// Parses CSV written by RecordWriter (header + numeric rows).
inline SweepTable parse_csv(std::string_view text) {
  SweepTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("parse_csv: empty input");
  table.columns = detail::split(line, ',');
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = detail::split(line, ',');
    if (cells.size() != table.columns.size())
      throw std::invalid_argument("parse_csv: line " + std::to_string(lineno) + " has " +
                                  std::to_string(cells.size()) + " fields");
    SweepRecord rec;
    for (const auto& c : cells) {
      const auto v = parse_double(c);
      if (!v) throw std::invalid_argument("parse_csv: line " + std::to_string(lineno) + ": bad number '" + c + "'");
      rec.values.push_back(*v);
    }
    table.records.push_back(std::move(rec));
  }
  return table;
}

inline std::vector<std::string> report_columns() {
  return {"concurrence", "coherence_a", "coherence_b", "purity", "lambda1", "lambda2", "lambda3", "lambda4"};
}

inline std::vector<double> report_values(const MeasureReport& r) {
  return {r.concurrence,         r.coherence_a,         r.coherence_b,         r.purity,
          r.wootters_lambdas[0], r.wootters_lambdas[1], r.wootters_lambdas[2], r.wootters_lambdas[3]};
}

}  // namespace mdi
