#pragma once

// Benchmark harness: a text suite of generator parameters is expanded into
// instances, each solved once, and the results serialized as CSV. Everything
// except wall time is deterministic, so suite files double as regression
// fixtures.
//
// Suite format, one instance per line ('#' lines and blank lines ignored):
//   gen <rows> <cols> <colors> <density> <seed> <k>
//   cex <n> <k>

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "bas/board.hpp"
#include "bas/generator.hpp"
#include "bas/solver.hpp"

namespace bas {

struct SuiteEntry {
  enum class Kind { Generated, Counterexample };
  Kind kind = Kind::Generated;
  GenParams params;
  int counterexample_size = 0;
  int k = 0;
};

struct BenchRecord {
  std::string id;
  int n = 0;
  int m = 0;
  int k = 0;
  std::size_t buttons = 0;
  int kernel_rows = 0;
  int kernel_cols = 0;
  std::size_t kernel_buttons = 0;
  bool answer = false;
  std::uint64_t nodes_explored = 0;
  double wall_ms = 0.0;
};

namespace detail {

template <typename T>
T parse_suite_number(std::string_view token, int line_no) {
  T value{};
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad suite number '" +
                     std::string(token) + "'");
  return value;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace detail

inline std::vector<SuiteEntry> parse_suite(std::string_view text) {
  std::vector<SuiteEntry> entries;
  auto lines = detail::split_lines(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    int line_no = static_cast<int>(l) + 1;
    auto fields = detail::split_fields(lines[l]);
    if (fields.empty() || fields[0].front() == '#') continue;
    SuiteEntry entry;
    if (fields[0] == "gen") {
      if (fields.size() != 7)
        throw ParseError("line " + std::to_string(line_no) +
                         ": gen needs <rows> <cols> <colors> <density> <seed> <k>");
      entry.kind = SuiteEntry::Kind::Generated;
      entry.params.rows = detail::parse_suite_number<int>(fields[1], line_no);
      entry.params.cols = detail::parse_suite_number<int>(fields[2], line_no);
      entry.params.colors = detail::parse_suite_number<int>(fields[3], line_no);
      entry.params.density = detail::parse_suite_number<double>(fields[4], line_no);
      entry.params.seed = detail::parse_suite_number<std::uint64_t>(fields[5], line_no);
      entry.k = detail::parse_suite_number<int>(fields[6], line_no);
    } else if (fields[0] == "cex") {
      if (fields.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": cex needs <n> <k>");
      entry.kind = SuiteEntry::Kind::Counterexample;
      entry.counterexample_size = detail::parse_suite_number<int>(fields[1], line_no);
      entry.k = detail::parse_suite_number<int>(fields[2], line_no);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown suite entry '" +
                       std::string(fields[0]) + "'");
    }
    if (entry.k < 0)
      throw ParseError("line " + std::to_string(line_no) + ": k must be non-negative");
    entries.push_back(entry);
  }
  return entries;
}

/// Solves each suite instance in order. Records keep suite order; only
/// wall_ms varies between runs.
inline std::vector<BenchRecord> run_benchmark(const std::vector<SuiteEntry>& entries) {
  std::vector<BenchRecord> records;
  records.reserve(entries.size());
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    const SuiteEntry& entry = entries[idx];
    bool generated = entry.kind == SuiteEntry::Kind::Generated;
    Board board = generated ? generate_instance(entry.params)
                            : generate_counterexample(entry.counterexample_size);
    BenchRecord rec;
    rec.id = (generated ? "gen-" : "cex-") + std::to_string(idx + 1);
    rec.n = board.rows();
    rec.m = board.cols();
    rec.k = entry.k;
    rec.buttons = board.button_count();

    auto start = std::chrono::steady_clock::now();
    SolveReport report = solve(Instance{std::move(board), entry.k});
    auto stop = std::chrono::steady_clock::now();

    rec.kernel_rows = report.kernel.result.board.rows();
    rec.kernel_cols = report.kernel.result.board.cols();
    rec.kernel_buttons = report.kernel.result.board.button_count();
    rec.answer = report.yes;
    rec.nodes_explored = report.nodes_explored;
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    records.push_back(std::move(rec));
  }
  return records;
}

/// CSV text for the records. The first line pins the schema version and the
/// generator algorithm; the second is the column header.
inline std::string format_csv(const std::vector<BenchRecord>& records) {
  std::string out = "# schema=bas-bench-v1 prng=splitmix64\n";
  out += "id,n,m,k,buttons,kernel_rows,kernel_cols,kernel_buttons,answer,nodes_explored,wall_ms\n";
  for (const BenchRecord& rec : records) {
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.3f", rec.wall_ms);
    out += rec.id + "," + std::to_string(rec.n) + "," + std::to_string(rec.m) + "," +
           std::to_string(rec.k) + "," + std::to_string(rec.buttons) + "," +
           std::to_string(rec.kernel_rows) + "," + std::to_string(rec.kernel_cols) + "," +
           std::to_string(rec.kernel_buttons) + "," + (rec.answer ? "yes" : "no") + "," +
           std::to_string(rec.nodes_explored) + "," + wall + "\n";
  }
  return out;
}

}  // namespace bas
