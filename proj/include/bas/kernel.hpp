#pragma once

// Reduction rules and the fixpoint kernelization loop. The rules either prove
// the instance unsolvable ("no") or shrink it; the loop applies the lowest-
// numbered applicable rule until none applies.
//
//   rule 1  more than k heavy rows or more than k heavy columns   -> no
//   rule 2  more than k^2 light buttons                           -> no
//   rule 3  delete button-free rows and columns
//   rule 4  row-block reduction: delete the buttons of a pivot row
//   rule 5  more than (4k^2+1)(k+1)k(4k+6)^k rows                 -> no
//   rule 6  column analogue of rule 4
//   rule 7  column analogue of rule 5                             -> no
//   rule 8  at least k*max(n,m)+1 buttons                         -> no

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bas/board.hpp"

namespace bas {

using BigInt = boost::multiprecision::cpp_int;

/// Row-count threshold for rules 5 and 7: (4k^2+1)(k+1)k(4k+6)^k, computed
/// exactly (the value outgrows 64 bits around k = 10).
inline BigInt row_count_bound(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  BigInt kk(k);
  return (4 * kk * kk + 1) * (kk + 1) * kk *
         boost::multiprecision::pow(BigInt(4 * kk + 6), static_cast<unsigned>(k));
}

/// rule 1: ">k heavy rows or >k heavy columns" means some line needs more
/// than one cut of its own, which a k-cut solution cannot afford.
inline bool rule_heavy_bound(const Instance& inst) {
  auto lc = classify_lines(inst.board, inst.k);
  auto limit = static_cast<std::size_t>(inst.k);
  return lc.heavy_rows.size() > limit || lc.heavy_cols.size() > limit;
}

/// rule 2: each cut removes at most k light buttons, so >k^2 light buttons
/// cannot be cleared by k cuts.
inline bool rule_light_bound(const Instance& inst) {
  auto lc = classify_lines(inst.board, inst.k);
  return lc.light_button_count >
         static_cast<std::uint64_t>(inst.k) * static_cast<std::uint64_t>(inst.k);
}

struct EmptyLinesReduction {
  Instance instance;
  std::vector<int> deleted_rows;
  std::vector<int> deleted_cols;
};

/// rule 3: drop every button-free row and column, recompacting indices.
inline std::optional<EmptyLinesReduction> rule_empty_lines(const Instance& inst) {
  const Board& b = inst.board;
  std::vector<char> row_used(static_cast<std::size_t>(b.rows()) + 1, 0);
  std::vector<char> col_used(static_cast<std::size_t>(b.cols()) + 1, 0);
  for (const auto& [cell, color] : b.cells()) {
    row_used[static_cast<std::size_t>(cell.row)] = 1;
    col_used[static_cast<std::size_t>(cell.col)] = 1;
  }

  EmptyLinesReduction out;
  std::vector<int> new_row(static_cast<std::size_t>(b.rows()) + 1, 0);
  std::vector<int> new_col(static_cast<std::size_t>(b.cols()) + 1, 0);
  int n = 0, m = 0;
  for (int i = 1; i <= b.rows(); ++i) {
    if (row_used[static_cast<std::size_t>(i)])
      new_row[static_cast<std::size_t>(i)] = ++n;
    else
      out.deleted_rows.push_back(i);
  }
  for (int j = 1; j <= b.cols(); ++j) {
    if (col_used[static_cast<std::size_t>(j)])
      new_col[static_cast<std::size_t>(j)] = ++m;
    else
      out.deleted_cols.push_back(j);
  }
  if (out.deleted_rows.empty() && out.deleted_cols.empty()) return std::nullopt;

  Board reduced(n, m);
  for (const auto& [cell, color] : b.cells())
    reduced.put(new_row[static_cast<std::size_t>(cell.row)],
                new_col[static_cast<std::size_t>(cell.col)], color);
  out.instance = Instance{std::move(reduced), inst.k};
  return out;
}

/// A consecutive row interval in which every column's buttons share one
/// color. occupied_cols holds the columns with at least one button in the
/// block, sparse_cols those with between 1 and k+1.
struct RowBlock {
  int lo = 0;
  int hi = 0;
  std::set<int> occupied_cols;
  std::set<int> sparse_cols;
};

/// Checks the interval [lo, hi] and fills in the block's column sets;
/// nullopt if some column mixes colors inside the interval.
inline std::optional<RowBlock> make_row_block(const Board& board, int lo, int hi, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (lo < 1 || hi > board.rows() || lo > hi)
    throw std::out_of_range("row interval outside board");
  std::map<int, Color> col_color;
  std::map<int, std::size_t> col_count;
  auto begin = board.cells().lower_bound(Cell{lo, 0});
  auto end = board.cells().lower_bound(Cell{hi + 1, 0});
  for (auto it = begin; it != end; ++it) {
    auto [pos, inserted] = col_color.try_emplace(it->first.col, it->second);
    if (!inserted && pos->second != it->second) return std::nullopt;
    ++col_count[it->first.col];
  }
  RowBlock block{lo, hi, {}, {}};
  for (const auto& [col, count] : col_count) {
    block.occupied_cols.insert(col);
    if (count <= static_cast<std::size_t>(k) + 1) block.sparse_cols.insert(col);
  }
  return block;
}

struct RowBlockReduction {
  RowBlock block;
  int pivot_row = 0;
};

/// Finds the rule-4 pattern: a row block X = [a,b] and a pivot row i0 in X
/// holding at least one button, such that every occupied column of the block
/// has >= k buttons strictly above i0 and >= k strictly below (within X).
/// Candidates are scanned in increasing (a, b, i0) order and the first hit
/// wins, so the reduction is deterministic.
inline std::optional<RowBlockReduction> find_row_block_reduction(const Instance& inst) {
  const Board& board = inst.board;
  const int k = inst.k;
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = board.rows();
  if (n == 0 || board.empty()) return std::nullopt;

  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(board.cols()) + 1);
  std::vector<int> row_buttons(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [cell, color] : board.cells()) {
    col_rows[static_cast<std::size_t>(cell.col)].push_back(cell.row);
    ++row_buttons[static_cast<std::size_t>(cell.row)];
  }

  // buttons of column j with row in [lo, hi], as an index range into col_rows[j]
  auto span_in = [&](int j, int lo, int hi) {
    const auto& rows = col_rows[static_cast<std::size_t>(j)];
    auto first = std::lower_bound(rows.begin(), rows.end(), lo);
    auto last = std::upper_bound(rows.begin(), rows.end(), hi);
    return std::pair(first, last);
  };

  for (int a = 1; a <= n; ++a) {
    std::map<int, Color> col_color;  // block-wide color per column, grows with b
    std::vector<int> block_cols;
    for (int b = a; b <= n; ++b) {
      bool still_block = true;
      auto row_begin = board.cells().lower_bound(Cell{b, 0});
      auto row_end = board.cells().lower_bound(Cell{b + 1, 0});
      for (auto it = row_begin; it != row_end; ++it) {
        auto [pos, inserted] = col_color.try_emplace(it->first.col, it->second);
        if (inserted)
          block_cols.push_back(it->first.col);
        else if (pos->second != it->second)
          still_block = false;
      }
      if (!still_block) break;
      if (k >= 1 && b - a < 2 * k) continue;  // pivot needs k rows' worth of buttons on each side

      int pivot_min = a, pivot_max = b;
      for (int j : block_cols) {
        auto [first, last] = span_in(j, a, b);
        auto count = last - first;
        if (count < 2 * k) {
          pivot_min = b + 1;  // this column can never feed both sides
          break;
        }
        if (k >= 1) {
          pivot_min = std::max(pivot_min, *(first + (k - 1)) + 1);
          pivot_max = std::min(pivot_max, *(last - k) - 1);
        }
      }
      for (int pivot = pivot_min; pivot <= pivot_max; ++pivot) {
        if (row_buttons[static_cast<std::size_t>(pivot)] == 0) continue;
        auto block = make_row_block(board, a, b, k);
        return RowBlockReduction{std::move(*block), pivot};
      }
    }
  }
  return std::nullopt;
}

struct RowBlockApplication {
  Instance instance;
  RowBlock block;
  int pivot_row = 0;
  std::size_t removed_buttons = 0;
};

/// rule 4: delete every button of the pivot row found by
/// find_row_block_reduction. The row itself stays; rule 3 removes it later.
inline std::optional<RowBlockApplication> rule_row_block(const Instance& inst) {
  auto hit = find_row_block_reduction(inst);
  if (!hit) return std::nullopt;
  Board reduced = inst.board;
  std::size_t removed = 0;
  for (int j = 1; j <= reduced.cols(); ++j) {
    if (reduced.at(hit->pivot_row, j) != 0) {
      reduced.clear(hit->pivot_row, j);
      ++removed;
    }
  }
  return RowBlockApplication{Instance{std::move(reduced), inst.k}, std::move(hit->block),
                             hit->pivot_row, removed};
}

/// rule 6: rule 4 on the transposed board; block fields refer to columns.
inline std::optional<RowBlockApplication> rule_column_block(const Instance& inst) {
  auto hit = rule_row_block(Instance{transpose(inst.board), inst.k});
  if (!hit) return std::nullopt;
  hit->instance.board = transpose(hit->instance.board);
  return hit;
}

/// rule 5: too many rows for any k-cut solution once rules 1-4 are exhausted.
inline bool rule_row_count(const Instance& inst) {
  return BigInt(inst.board.rows()) > row_count_bound(inst.k);
}

/// rule 7: column analogue of rule 5.
inline bool rule_col_count(const Instance& inst) {
  return BigInt(inst.board.cols()) > row_count_bound(inst.k);
}

/// rule 8: k cuts remove at most k*max(n,m) buttons.
inline bool rule_button_count(const Instance& inst) {
  std::uint64_t limit = static_cast<std::uint64_t>(inst.k) *
                            static_cast<std::uint64_t>(std::max(inst.board.rows(),
                                                                inst.board.cols())) +
                        1;
  return inst.board.button_count() >= limit;
}

struct TraceEntry {
  int rule = 0;
  std::string note;
  std::size_t buttons_after = 0;  // board measures once the application is done
  std::size_t lines_after = 0;    // rows + columns
};

/// Outcome of the kernelization fixpoint. When no_rule is set the instance
/// was proved unsolvable by that rule and `result` holds the state the rule
/// fired on; otherwise `result` is fully reduced (no rule applies). row_map
/// and col_map translate the result's 1-based line indices back to input
/// lines (rule 3 recompacts indices).
struct KernelResult {
  std::optional<int> no_rule;
  Instance result;
  std::vector<TraceEntry> trace;
  std::vector<int> row_map;
  std::vector<int> col_map;

  bool is_no() const { return no_rule.has_value(); }
};

namespace detail {

inline std::vector<int> identity_map(int count) {
  std::vector<int> map(static_cast<std::size_t>(count));
  std::iota(map.begin(), map.end(), 1);
  return map;
}

inline std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// Applies the rules in strict priority order (1 through 8, restarting after
/// every change) until one proves "no" or none applies. Trace notes describe
/// deletions in input coordinates.
inline KernelResult kernelize(const Instance& inst) {
  if (inst.k < 0) throw std::invalid_argument("k must be non-negative");
  KernelResult kr;
  kr.result = inst;
  kr.row_map = detail::identity_map(inst.board.rows());
  kr.col_map = detail::identity_map(inst.board.cols());

  auto record = [&](int rule, std::string note) {
    kr.trace.push_back(TraceEntry{
        rule, std::move(note), kr.result.board.button_count(),
        static_cast<std::size_t>(kr.result.board.rows()) +
            static_cast<std::size_t>(kr.result.board.cols())});
  };
  auto reject = [&](int rule, std::string note) {
    record(rule, std::move(note));
    kr.no_rule = rule;
  };

  const std::size_t step_limit = inst.board.button_count() +
                                 static_cast<std::size_t>(inst.board.rows()) +
                                 static_cast<std::size_t>(inst.board.cols()) + 8;
  for (std::size_t step = 0; step <= step_limit; ++step) {
    const Instance& cur = kr.result;
    if (rule_heavy_bound(cur)) {
      auto lc = classify_lines(cur.board, cur.k);
      reject(1, "heavy lines exceed k (rows=" + std::to_string(lc.heavy_rows.size()) +
                    " cols=" + std::to_string(lc.heavy_cols.size()) + ")");
      return kr;
    }
    if (rule_light_bound(cur)) {
      auto lc = classify_lines(cur.board, cur.k);
      reject(2, "light buttons exceed k^2 (light=" +
                    std::to_string(lc.light_button_count) + ")");
      return kr;
    }
    if (auto r3 = rule_empty_lines(cur)) {
      std::vector<int> orig_rows, orig_cols;
      for (int i : r3->deleted_rows)
        orig_rows.push_back(kr.row_map[static_cast<std::size_t>(i) - 1]);
      for (int j : r3->deleted_cols)
        orig_cols.push_back(kr.col_map[static_cast<std::size_t>(j) - 1]);
      std::vector<int> new_row_map, new_col_map;
      for (int i = 1; i <= cur.board.rows(); ++i)
        if (!std::binary_search(r3->deleted_rows.begin(), r3->deleted_rows.end(), i))
          new_row_map.push_back(kr.row_map[static_cast<std::size_t>(i) - 1]);
      for (int j = 1; j <= cur.board.cols(); ++j)
        if (!std::binary_search(r3->deleted_cols.begin(), r3->deleted_cols.end(), j))
          new_col_map.push_back(kr.col_map[static_cast<std::size_t>(j) - 1]);
      kr.result = std::move(r3->instance);
      kr.row_map = std::move(new_row_map);
      kr.col_map = std::move(new_col_map);
      std::string note = "removed empty";
      if (!orig_rows.empty()) note += " rows " + detail::join_ints(orig_rows);
      if (!orig_cols.empty()) {
        if (!orig_rows.empty()) note += " and";
        note += " cols " + detail::join_ints(orig_cols);
      }
      record(3, std::move(note));
      continue;
    }
    if (auto r4 = rule_row_block(cur)) {
      int pivot = kr.row_map[static_cast<std::size_t>(r4->pivot_row) - 1];
      int lo = kr.row_map[static_cast<std::size_t>(r4->block.lo) - 1];
      int hi = kr.row_map[static_cast<std::size_t>(r4->block.hi) - 1];
      kr.result = std::move(r4->instance);
      record(4, "removed " + std::to_string(r4->removed_buttons) +
                    (r4->removed_buttons == 1 ? " button" : " buttons") + " from row " +
                    std::to_string(pivot) + " (block rows " + std::to_string(lo) + ".." +
                    std::to_string(hi) + ")");
      continue;
    }
    if (rule_row_count(cur)) {
      reject(5, "row count " + std::to_string(cur.board.rows()) + " exceeds bound");
      return kr;
    }
    if (auto r6 = rule_column_block(cur)) {
      int pivot = kr.col_map[static_cast<std::size_t>(r6->pivot_row) - 1];
      int lo = kr.col_map[static_cast<std::size_t>(r6->block.lo) - 1];
      int hi = kr.col_map[static_cast<std::size_t>(r6->block.hi) - 1];
      kr.result = std::move(r6->instance);
      record(6, "removed " + std::to_string(r6->removed_buttons) +
                    (r6->removed_buttons == 1 ? " button" : " buttons") + " from col " +
                    std::to_string(pivot) + " (block cols " + std::to_string(lo) + ".." +
                    std::to_string(hi) + ")");
      continue;
    }
    if (rule_col_count(cur)) {
      reject(7, "col count " + std::to_string(cur.board.cols()) + " exceeds bound");
      return kr;
    }
    if (rule_button_count(cur)) {
      reject(8, "button count " + std::to_string(cur.board.button_count()) +
                    " reaches k*max(n,m)+1");
      return kr;
    }
    return kr;  // fixpoint: nothing applies
  }
  throw std::logic_error("kernelize exceeded its termination bound");
}

/// Trace lines in the "rule=<id> <note>" text form.
inline std::string format_trace_line(const TraceEntry& entry) {
  return "rule=" + std::to_string(entry.rule) + " " + entry.note;
}

/// Either "NO rule=<id>" or the reduced board preceded by '#' trace lines.
inline std::string format_kernel_result(const KernelResult& kr) {
  std::string out;
  for (const auto& entry : kr.trace)
    if (!kr.no_rule || entry.rule != *kr.no_rule) out += "# " + format_trace_line(entry) + "\n";
  if (kr.is_no())
    out += "NO rule=" + std::to_string(*kr.no_rule) + "\n";
  else
    out += serialize_board(kr.result.board);
  return out;
}

}  // namespace bas
