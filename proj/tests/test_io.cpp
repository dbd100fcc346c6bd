#include "test_support.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

using namespace mdi;

namespace {

SweepTable sample_table() {
  SweepConfig cfg = preset("fig3");
  cfg.axes[0].count = 13;
  cfg.axes[1].count = 9;
  cfg.quantities = {Quantity::concurrence, Quantity::coherence_a, Quantity::purity};
  return run_sweep(cfg);
}

}  // namespace

TEST(FormatDouble, ShortestRoundTrip) {
  std::mt19937_64 rng(151);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    const auto back = parse_double(format_double(x));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(kPi), "3.141592653589793");
}

TEST(ParseDouble, StrictAboutTrailingGarbage) {
  EXPECT_FALSE(parse_double("1.0x").has_value());
  EXPECT_FALSE(parse_double("").has_value());
  EXPECT_FALSE(parse_double("abc").has_value());
  EXPECT_EQ(*parse_double("-0.25"), -0.25);
}

TEST(Csv, HeaderAndUnixNewlines) {
  const std::string text = to_string(sample_table(), OutputFormat::csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), "t,w,concurrence,coherence_a,purity");
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Csv, WriteParseWriteIsByteIdentical) {
  const std::string first = to_string(sample_table(), OutputFormat::csv);
  const SweepTable parsed = parse_csv(first);
  EXPECT_EQ(parsed.records.size(), 13u * 9u);
  EXPECT_EQ(to_string(parsed, OutputFormat::csv), first);
}

TEST(Csv, RandomTablesRoundTrip) {
  std::mt19937_64 rng(157);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int trial = 0; trial < 50; ++trial) {
    SweepTable t;
    t.columns = {"a", "b", "c"};
    for (int r = 0; r < 20; ++r) t.records.push_back({{u(rng), std::ldexp(u(rng), expo(rng)), -0.0}});
    const SweepTable back = parse_csv(to_string(t, OutputFormat::csv));
    ASSERT_EQ(back.records.size(), t.records.size());
    for (std::size_t r = 0; r < t.records.size(); ++r) EXPECT_EQ(back.records[r].values, t.records[r].values);
  }
}

TEST(Csv, MalformedInputIsRejected) {
  EXPECT_THROW(parse_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_csv("a,b\n1\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv("a,b\n1,zz\n"), std::invalid_argument);
}

TEST(JsonLines, EveryLineIsAValidObjectWithExactValues) {
  const SweepTable table = sample_table();
  std::istringstream in(to_string(table, OutputFormat::json_lines));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto obj = nlohmann::json::parse(line);
    ASSERT_TRUE(obj.is_object());
    ASSERT_EQ(obj.size(), table.columns.size());
    for (std::size_t k = 0; k < table.columns.size(); ++k)
      EXPECT_EQ(obj.at(table.columns[k]).get<double>(), table.records[n].values[k]);
    ++n;
  }
  EXPECT_EQ(n, table.records.size());
}

TEST(RecordWriter, RejectsWrongRecordWidth) {
  std::ostringstream os;
  RecordWriter w(os, {"a", "b"}, OutputFormat::csv);
  const std::vector<double> three{1.0, 2.0, 3.0};
  EXPECT_THROW(w.write(std::span<const double>(three)), std::invalid_argument);
}

TEST(OutputFormat, Names) {
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::csv);
  EXPECT_EQ(parse_output_format("jsonl"), OutputFormat::json_lines);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::json_lines);
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}

TEST(Report, ColumnsMatchValues) {
  const MeasureReport r = measure(partial_entangled(0.3));
  EXPECT_EQ(report_columns().size(), report_values(r).size());
  EXPECT_NEAR(report_values(r)[0], concurrence_pure(partial_entangled(0.3)), 1e-12);
}
