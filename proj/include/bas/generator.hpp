#pragma once

// Deterministic instance generation. Boards are a pure function of the
// parameters, reproducible across platforms, so benchmark suites and test
// sweeps can be described by their seeds alone.

#include <cstdint>
#include <stdexcept>

#include "bas/board.hpp"

namespace bas {

/// splitmix64 (Steele, Lea, Flood's 64-bit finalizer-based generator). Tiny,
/// well studied, and exactly reproducible from the constants alone, which is
/// the property the benchmark CSV header advertises.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), using the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct GenParams {
  int rows = 0;
  int cols = 0;
  int colors = 1;
  double density = 0.0;
  std::uint64_t seed = 0;
};

/// Random board: cells visited in row-major order, two PRNG draws per cell
/// (occupancy, then color) whether or not the cell ends up occupied, so the
/// draw stream never depends on earlier outcomes. Color uses a modulo, whose
/// bias at 64 bits is far below anything observable.
inline Board generate_instance(const GenParams& p) {
  if (p.rows < 1 || p.cols < 1)
    throw std::invalid_argument("generator needs positive board dimensions");
  if (p.colors < 1) throw std::invalid_argument("generator needs at least one color");
  if (!(p.density >= 0.0 && p.density <= 1.0))
    throw std::invalid_argument("density must lie in [0,1]");

  SplitMix64 rng(p.seed);
  Board board(p.rows, p.cols);
  for (int i = 1; i <= p.rows; ++i) {
    for (int j = 1; j <= p.cols; ++j) {
      double occupied = rng.next_unit();
      std::uint64_t color_draw = rng.next();
      if (occupied < p.density)
        board.put(i, j, 1 + static_cast<Color>(color_draw %
                                               static_cast<std::uint64_t>(p.colors)));
    }
  }
  return board;
}

/// The alternating n x 2 board: odd rows hold a color-1 button in column 1,
/// even rows a color-2 button in column 2. Two vertical cuts clear it, yet
/// its rows pairwise share no occupied column, which trips preprocessing
/// that assumes row-disjointness implies separate cuts. Regression family
/// for exactly that mistake.
inline Board generate_counterexample(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("counterexample size must be even and at least 2");
  Board board(n, 2);
  for (int i = 1; i <= n; ++i) {
    if (i % 2 == 1)
      board.put(i, 1, 1);
    else
      board.put(i, 2, 2);
  }
  return board;
}

}  // namespace bas
