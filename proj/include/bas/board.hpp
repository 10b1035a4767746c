#pragma once

// Board model for the orthogonal Buttons and Scissors puzzle: a sparse n x m
// grid of colored buttons, plus the cut algebra (validity, application,
// enumeration) and line classification used by the reduction rules.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bas {

/// Button colors are opaque positive integers; 0 marks an empty cell.
using Color = int;

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Thrown by the text parsers; the message names the offending line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse board: only occupied cells are stored, but the dimensions are kept
/// explicitly so empty rows and columns exist as entities (the empty-line
/// reduction deletes them). Rows and columns are 1-indexed. Dimensions may be
/// zero: a fully reduced empty instance is a 0 x 0 board.
class Board {
 public:
  Board() = default;
  Board(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("board dimensions must be non-negative");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool in_bounds(int row, int col) const {
    return row >= 1 && row <= rows_ && col >= 1 && col <= cols_;
  }

  /// Color at (row, col); 0 if the cell is empty.
  Color at(int row, int col) const {
    require_in_bounds(row, col);
    auto it = cells_.find(Cell{row, col});
    return it == cells_.end() ? 0 : it->second;
  }

  void put(int row, int col, Color color) {
    require_in_bounds(row, col);
    if (color <= 0) throw std::invalid_argument("button colors are positive");
    cells_[Cell{row, col}] = color;
  }

  void clear(int row, int col) {
    require_in_bounds(row, col);
    cells_.erase(Cell{row, col});
  }

  std::size_t button_count() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  /// Occupied cells in row-major order.
  const std::map<Cell, Color>& cells() const { return cells_; }

  friend bool operator==(const Board&, const Board&) = default;

 private:
  void require_in_bounds(int row, int col) const {
    if (!in_bounds(row, col))
      throw std::out_of_range("cell (" + std::to_string(row) + "," +
                              std::to_string(col) + ") outside " +
                              std::to_string(rows_) + "x" +
                              std::to_string(cols_) + " board");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::map<Cell, Color> cells_;
};

/// A decision instance: board plus cut budget.
struct Instance {
  Board board;
  int k = 0;
};

enum class Orientation { Horizontal, Vertical };

/// A maximal-thrift cut description: one grid line plus an inclusive span.
/// Horizontal: row `line`, columns lo..hi. Vertical: column `line`, rows
/// lo..hi. A single-cell cut is canonically Horizontal, so cuts compare equal
/// iff they cover the same cell sequence.
struct Cut {
  Orientation orientation = Orientation::Horizontal;
  int line = 0;
  int lo = 0;
  int hi = 0;

  static Cut horizontal(int row, int col_lo, int col_hi) {
    if (col_lo > col_hi) throw std::invalid_argument("cut span reversed");
    return Cut{Orientation::Horizontal, row, col_lo, col_hi};
  }

  static Cut vertical(int row_lo, int row_hi, int col) {
    if (row_lo > row_hi) throw std::invalid_argument("cut span reversed");
    if (row_lo == row_hi) return horizontal(row_lo, col, col);
    return Cut{Orientation::Vertical, col, row_lo, row_hi};
  }

  /// Cells covered, in cut order.
  Cell cell(int offset) const {
    int t = lo + offset;
    return orientation == Orientation::Horizontal ? Cell{line, t} : Cell{t, line};
  }
  int length() const { return hi - lo + 1; }

  friend auto operator<=>(const Cut&, const Cut&) = default;
};

/// Heavy/light bookkeeping for one (board, k) pair. A line is heavy iff it
/// holds at least k+1 buttons; a button is light iff it lies in no heavy row
/// and no heavy column.
struct LineClassification {
  std::set<int> heavy_rows;
  std::set<int> heavy_cols;
  std::size_t light_button_count = 0;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

inline std::vector<long long> parse_int_fields(std::string_view line, int line_no) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<long long> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    std::string_view tok = line.substr(i, j - i);
    long long value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size() || value < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected a non-negative integer, got '" +
                       std::string(tok) + "'");
    fields.push_back(value);
    i = j;
  }
  return fields;
}

inline bool blank(std::string_view line) {
  return line.find_first_not_of(" \r") == std::string_view::npos;
}

}  // namespace detail

/// Parses the board text format: a "<n> <m>" header line, then n lines of m
/// space-separated non-negative integers (0 = empty cell, t > 0 = button of
/// color t). Errors name the offending line.
inline Board parse_board(std::string_view text) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError("line 1: missing board header");
  auto header = detail::parse_int_fields(lines[0], 1);
  if (header.size() != 2)
    throw ParseError("line 1: header must be '<rows> <cols>'");
  if (header[0] > 1'000'000'000 || header[1] > 1'000'000'000)
    throw ParseError("line 1: board dimensions out of range");
  int n = static_cast<int>(header[0]);
  int m = static_cast<int>(header[1]);
  Board board(n, m);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<std::size_t>(i) >= lines.size())
      throw ParseError("line " + std::to_string(i + 1) + ": missing board row " +
                       std::to_string(i));
    auto fields = detail::parse_int_fields(lines[i], i + 1);
    if (fields.size() != static_cast<std::size_t>(m))
      throw ParseError("line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(m) + " values, got " +
                       std::to_string(fields.size()));
    for (int j = 1; j <= m; ++j) {
      long long color = fields[j - 1];
      if (color > std::numeric_limits<int>::max())
        throw ParseError("line " + std::to_string(i + 1) + ": color out of range");
      if (color > 0) board.put(i, j, static_cast<Color>(color));
    }
  }
  for (std::size_t l = static_cast<std::size_t>(n) + 1; l < lines.size(); ++l) {
    if (!detail::blank(lines[l]))
      throw ParseError("line " + std::to_string(l + 1) + ": unexpected content after board");
  }
  return board;
}

/// Canonical text for a board: header plus one newline-terminated line per
/// row, single spaces, no trailing whitespace. parse_board round-trips it.
inline std::string serialize_board(const Board& board) {
  std::string out = std::to_string(board.rows()) + " " + std::to_string(board.cols()) + "\n";
  auto it = board.cells().begin();
  for (int i = 1; i <= board.rows(); ++i) {
    for (int j = 1; j <= board.cols(); ++j) {
      Color c = 0;
      if (it != board.cells().end() && it->first == Cell{i, j}) {
        c = it->second;
        ++it;
      }
      out += std::to_string(c);
      out += (j == board.cols()) ? '\n' : ' ';
    }
  }
  return out;
}

inline Board transpose(const Board& board) {
  Board out(board.cols(), board.rows());
  for (const auto& [cell, color] : board.cells()) out.put(cell.col, cell.row, color);
  return out;
}

/// True iff both endpoint cells of the cut hold buttons and every button on
/// the cut shares one color. Interior empty cells are permitted. A cut that
/// leaves the board is an error, not merely invalid.
inline bool is_valid_cut(const Board& board, const Cut& cut) {
  if (cut.lo > cut.hi) throw std::invalid_argument("malformed cut: span reversed");
  bool horizontal = cut.orientation == Orientation::Horizontal;
  int line_max = horizontal ? board.rows() : board.cols();
  int span_max = horizontal ? board.cols() : board.rows();
  if (cut.line < 1 || cut.line > line_max || cut.lo < 1 || cut.hi > span_max)
    throw std::out_of_range("cut outside board bounds");

  Cell first = cut.cell(0);
  Color color = board.at(first.row, first.col);
  if (color == 0) return false;
  Cell last = cut.cell(cut.length() - 1);
  if (board.at(last.row, last.col) != color) return false;
  for (int t = 1; t + 1 < cut.length(); ++t) {
    Cell c = cut.cell(t);
    Color here = board.at(c.row, c.col);
    if (here != 0 && here != color) return false;
  }
  return true;
}

/// Removes every button on the cut. The cut must be valid.
inline Board apply_cut(const Board& board, const Cut& cut) {
  if (!is_valid_cut(board, cut)) throw std::invalid_argument("cut is not valid on this board");
  Board out = board;
  for (int t = 0; t < cut.length(); ++t) {
    Cell c = cut.cell(t);
    out.clear(c.row, c.col);
  }
  return out;
}

namespace detail {

// All valid spans along one line: every (lo, hi) pair inside a maximal
// same-color run of the line's buttons. `emit_single` suppresses the lo == hi
// spans so single-cell cuts are produced exactly once across both passes.
template <typename Emit>
void emit_line_cuts(const std::vector<std::pair<int, Color>>& buttons, bool emit_single,
                    Emit&& emit) {
  std::size_t run_start = 0;
  while (run_start < buttons.size()) {
    std::size_t run_end = run_start;
    while (run_end + 1 < buttons.size() &&
           buttons[run_end + 1].second == buttons[run_start].second)
      ++run_end;
    for (std::size_t a = run_start; a <= run_end; ++a)
      for (std::size_t b = a; b <= run_end; ++b)
        if (a != b || emit_single) emit(buttons[a].first, buttons[b].first);
    run_start = run_end + 1;
  }
}

}  // namespace detail

/// Every valid cut of the board in canonical form (single-cell cuts appear
/// once, as Horizontal), sorted by (orientation, line, lo, hi).
inline std::vector<Cut> enumerate_valid_cuts(const Board& board) {
  std::vector<Cut> cuts;

  std::vector<std::pair<int, Color>> line;
  int current_row = 0;
  auto flush_row = [&] {
    if (!line.empty())
      detail::emit_line_cuts(line, true, [&](int lo, int hi) {
        cuts.push_back(Cut::horizontal(current_row, lo, hi));
      });
    line.clear();
  };
  for (const auto& [cell, color] : board.cells()) {
    if (cell.row != current_row) {
      flush_row();
      current_row = cell.row;
    }
    line.emplace_back(cell.col, color);
  }
  flush_row();

  std::vector<std::vector<std::pair<int, Color>>> by_col(
      static_cast<std::size_t>(board.cols()) + 1);
  for (const auto& [cell, color] : board.cells())
    by_col[static_cast<std::size_t>(cell.col)].emplace_back(cell.row, color);
  for (int j = 1; j <= board.cols(); ++j)
    detail::emit_line_cuts(by_col[static_cast<std::size_t>(j)], false, [&](int lo, int hi) {
      cuts.push_back(Cut::vertical(lo, hi, j));
    });

  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

/// Heavy lines (>= k+1 buttons) and the count of light buttons.
inline LineClassification classify_lines(const Board& board, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  std::map<int, std::size_t> row_counts, col_counts;
  for (const auto& [cell, color] : board.cells()) {
    ++row_counts[cell.row];
    ++col_counts[cell.col];
  }
  LineClassification out;
  std::size_t threshold = static_cast<std::size_t>(k) + 1;
  for (const auto& [row, count] : row_counts)
    if (count >= threshold) out.heavy_rows.insert(row);
  for (const auto& [col, count] : col_counts)
    if (count >= threshold) out.heavy_cols.insert(col);
  for (const auto& [cell, color] : board.cells())
    if (!out.heavy_rows.contains(cell.row) && !out.heavy_cols.contains(cell.col))
      ++out.light_button_count;
  return out;
}

/// Cut text format: "H <row> <col_lo> <col_hi>" or "V <row_lo> <row_hi> <col>".
inline std::string format_cut(const Cut& cut) {
  if (cut.orientation == Orientation::Horizontal)
    return "H " + std::to_string(cut.line) + " " + std::to_string(cut.lo) + " " +
           std::to_string(cut.hi);
  return "V " + std::to_string(cut.lo) + " " + std::to_string(cut.hi) + " " +
         std::to_string(cut.line);
}

inline Cut parse_cut(std::string_view text) {
  std::string_view rest = text;
  if (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
  if (rest.empty()) throw ParseError("empty cut");
  char kind = rest[0];
  if ((kind != 'H' && kind != 'V') || rest.size() < 2 || rest[1] != ' ')
    throw ParseError("cut must start with 'H ' or 'V ': '" + std::string(text) + "'");
  auto fields = detail::parse_int_fields(rest.substr(1), 1);
  if (fields.size() != 3)
    throw ParseError("cut needs three coordinates: '" + std::string(text) + "'");
  for (long long f : fields)
    if (f < 1 || f > 1'000'000'000)
      throw ParseError("cut coordinate out of range: '" + std::string(text) + "'");
  int a = static_cast<int>(fields[0]);
  int b = static_cast<int>(fields[1]);
  int c = static_cast<int>(fields[2]);
  try {
    return kind == 'H' ? Cut::horizontal(a, b, c) : Cut::vertical(a, b, c);
  } catch (const std::invalid_argument&) {
    throw ParseError("cut span reversed: '" + std::string(text) + "'");
  }
}

}  // namespace bas
