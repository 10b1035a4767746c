#pragma once

// Exact decision solver: kernelize, then depth-bounded search over valid
// cuts. A brute-force oracle with a deliberately separate code path backs
// the test suite.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bas/board.hpp"
#include "bas/kernel.hpp"

namespace bas {

struct SolveOptions {
  bool use_kernel = true;
  bool prune_maximal = false;
};

/// Answer plus evidence. kernel_certificate is a solution of the reduced
/// instance; certificate is the same cuts translated to input-file line
/// numbers via the kernel's maps. When a block reduction (rule 4 or 6) fired
/// the translated cuts need not clear the original board, since those rules
/// change the solution set's witnesses, only the yes/no answer is preserved.
struct SolveReport {
  bool yes = false;
  std::vector<Cut> kernel_certificate;
  std::optional<std::vector<Cut>> certificate;
  KernelResult kernel;
  std::uint64_t nodes_explored = 0;
};

/// Replays the cuts on a copy of the board: the sequence must fit the
/// budget, every cut must be valid when its turn comes, and the board must
/// end empty. Out-of-bounds or malformed cuts count as invalid.
inline bool verify_solution(const Instance& inst, const std::vector<Cut>& cuts) {
  if (inst.k < 0) throw std::invalid_argument("k must be non-negative");
  if (cuts.size() > static_cast<std::size_t>(inst.k)) return false;
  Board board = inst.board;
  for (const Cut& cut : cuts) {
    try {
      if (!is_valid_cut(board, cut)) return false;
      board = apply_cut(board, cut);
    } catch (const std::exception&) {
      return false;
    }
  }
  return board.empty();
}

/// Translates cuts on the reduced board into input-file coordinates using
/// the kernel's line maps (both maps are strictly increasing, so spans stay
/// well formed).
inline std::vector<Cut> remap_cuts(const std::vector<Cut>& cuts,
                                   const std::vector<int>& row_map,
                                   const std::vector<int>& col_map) {
  auto row = [&](int i) { return row_map[static_cast<std::size_t>(i) - 1]; };
  auto col = [&](int j) { return col_map[static_cast<std::size_t>(j) - 1]; };
  std::vector<Cut> out;
  out.reserve(cuts.size());
  for (const Cut& c : cuts) {
    if (c.orientation == Orientation::Horizontal)
      out.push_back(Cut::horizontal(row(c.line), col(c.lo), col(c.hi)));
    else
      out.push_back(Cut::vertical(row(c.lo), row(c.hi), col(c.line)));
  }
  return out;
}

namespace detail {

/// Keeps exactly the cuts whose cell set is not strictly contained in
/// another listed cut's cell set. Containment happens only along one line,
/// except that a single-cell cut can sit inside a perpendicular cut.
inline std::vector<Cut> filter_maximal_cuts(const std::vector<Cut>& cuts) {
  auto covered_by = [](const Cut& inner, const Cut& outer) {
    if (outer.orientation == inner.orientation)
      return outer.line == inner.line && outer.lo <= inner.lo && inner.hi <= outer.hi;
    if (inner.lo != inner.hi) return false;
    return outer.line == inner.lo && outer.lo <= inner.line && inner.line <= outer.hi;
  };
  std::vector<Cut> out;
  for (const Cut& c : cuts) {
    bool dominated = false;
    for (const Cut& d : cuts) {
      if (d == c) continue;
      if (covered_by(c, d)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(c);
  }
  return out;
}

struct SearchState {
  bool prune_maximal = false;
  std::map<std::string, int> failed;  // board text -> largest budget that failed
  std::uint64_t nodes = 0;
  std::vector<Cut> cuts;
};

/// Depth-first search in canonical cut order; the first solution found is
/// the certificate. Only failures are memoized (keyed by board state, value
/// the largest budget known insufficient) so the certificate is independent
/// of cache hits.
inline bool search(const Board& board, int budget, SearchState& st) {
  ++st.nodes;
  if (board.empty()) return true;
  if (budget == 0) return false;
  std::string key = serialize_board(board);
  if (auto it = st.failed.find(key); it != st.failed.end() && it->second >= budget)
    return false;
  auto cuts = enumerate_valid_cuts(board);
  if (st.prune_maximal) cuts = filter_maximal_cuts(cuts);
  for (const Cut& cut : cuts) {
    Board next = apply_cut(board, cut);
    st.cuts.push_back(cut);
    if (search(next, budget - 1, st)) return true;
    st.cuts.pop_back();
  }
  auto [it, inserted] = st.failed.try_emplace(std::move(key), budget);
  if (!inserted && it->second < budget) it->second = budget;
  return false;
}

}  // namespace detail

/// Decides the instance. Kernelization runs first unless disabled; a kernel
/// "no" is final and skips the search entirely.
inline SolveReport solve(const Instance& inst, const SolveOptions& options = {}) {
  if (inst.k < 0) throw std::invalid_argument("k must be non-negative");
  SolveReport report;
  if (options.use_kernel) {
    report.kernel = kernelize(inst);
    if (report.kernel.is_no()) return report;
  } else {
    report.kernel.result = inst;
    report.kernel.row_map = detail::identity_map(inst.board.rows());
    report.kernel.col_map = detail::identity_map(inst.board.cols());
  }

  detail::SearchState st;
  st.prune_maximal = options.prune_maximal;
  report.yes = detail::search(report.kernel.result.board, report.kernel.result.k, st);
  report.nodes_explored = st.nodes;
  if (report.yes) {
    report.kernel_certificate = st.cuts;
    report.certificate =
        remap_cuts(st.cuts, report.kernel.row_map, report.kernel.col_map);
  }
  return report;
}

namespace detail {

/// Dense grid for the oracle, so its state handling shares nothing with
/// Board.
struct OracleGrid {
  int n = 0;
  int m = 0;
  std::vector<int> cell;  // 1-based, row-major over (n+1) x (m+1)
  int buttons = 0;

  int& at(int i, int j) {
    return cell[static_cast<std::size_t>(i) * (static_cast<std::size_t>(m) + 1) +
                static_cast<std::size_t>(j)];
  }
};

/// Tries every valid cut, vertical lines first (the reverse of the solver's
/// order, which answers must not depend on). Single-cell cuts are generated
/// once, in the vertical pass.
inline bool oracle_search(OracleGrid& g, int budget, std::vector<Cut>& cuts) {
  if (g.buttons == 0) return true;
  if (budget == 0) return false;

  auto try_span = [&](bool vertical, int line, int lo, int hi) {
    std::vector<std::pair<int, int>> removed;
    for (int t = lo; t <= hi; ++t) {
      int& ref = vertical ? g.at(t, line) : g.at(line, t);
      if (ref != 0) {
        removed.emplace_back(t, ref);
        ref = 0;
      }
    }
    g.buttons -= static_cast<int>(removed.size());
    cuts.push_back(vertical ? Cut::vertical(lo, hi, line) : Cut::horizontal(line, lo, hi));
    if (oracle_search(g, budget - 1, cuts)) return true;
    cuts.pop_back();
    g.buttons += static_cast<int>(removed.size());
    for (auto [pos, color] : removed) (vertical ? g.at(pos, line) : g.at(line, pos)) = color;
    return false;
  };

  // Valid cuts along a line are the (start, end) button pairs inside one
  // same-color run of that line's buttons.
  std::vector<std::pair<int, int>> btns;
  for (int j = 1; j <= g.m; ++j) {
    btns.clear();
    for (int i = 1; i <= g.n; ++i)
      if (int c = g.at(i, j); c != 0) btns.emplace_back(i, c);
    for (std::size_t s = 0; s < btns.size(); ++s)
      for (std::size_t e = s; e < btns.size() && btns[e].second == btns[s].second; ++e)
        if (try_span(true, j, btns[s].first, btns[e].first)) return true;
  }
  for (int i = 1; i <= g.n; ++i) {
    btns.clear();
    for (int j = 1; j <= g.m; ++j)
      if (int c = g.at(i, j); c != 0) btns.emplace_back(j, c);
    for (std::size_t s = 0; s < btns.size(); ++s)
      for (std::size_t e = s + 1; e < btns.size() && btns[e].second == btns[s].second; ++e)
        if (try_span(false, i, btns[s].first, btns[e].first)) return true;
  }
  return false;
}

}  // namespace detail

/// Exhaustive reference answer: explores every sequence of at most k valid
/// cuts with no reductions, memoization, or pruning. Returns a witness
/// sequence on yes, nullopt on no.
inline std::optional<std::vector<Cut>> oracle_solve(const Instance& inst) {
  if (inst.k < 0) throw std::invalid_argument("k must be non-negative");
  detail::OracleGrid g;
  g.n = inst.board.rows();
  g.m = inst.board.cols();
  g.cell.assign((static_cast<std::size_t>(g.n) + 1) * (static_cast<std::size_t>(g.m) + 1), 0);
  for (const auto& [cell, color] : inst.board.cells()) g.at(cell.row, cell.col) = color;
  g.buttons = static_cast<int>(inst.board.button_count());
  std::vector<Cut> cuts;
  if (detail::oracle_search(g, inst.k, cuts)) return cuts;
  return std::nullopt;
}

/// Report text: YES or NO, certificate cuts in input coordinates, then '#'
/// comment lines (kernel trace, the line maps whenever empty lines were
/// deleted, reduced-board stats, search node count).
inline std::string format_report(const SolveReport& report) {
  std::string out = report.yes ? "YES\n" : "NO\n";
  if (report.certificate)
    for (const Cut& cut : *report.certificate) out += format_cut(cut) + "\n";
  for (const auto& entry : report.kernel.trace)
    out += "# " + format_trace_line(entry) + "\n";
  bool remapped = std::any_of(report.kernel.trace.begin(), report.kernel.trace.end(),
                              [](const TraceEntry& e) { return e.rule == 3; });
  if (remapped) {
    out += "# rowmap=" + detail::join_ints(report.kernel.row_map) + "\n";
    out += "# colmap=" + detail::join_ints(report.kernel.col_map) + "\n";
  }
  out += "# kernel rows=" + std::to_string(report.kernel.result.board.rows()) +
         " cols=" + std::to_string(report.kernel.result.board.cols()) +
         " buttons=" + std::to_string(report.kernel.result.board.button_count()) + "\n";
  out += "# nodes=" + std::to_string(report.nodes_explored) + "\n";
  return out;
}

}  // namespace bas
