#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bas/generator.hpp"
#include "bas/solver.hpp"
#include "test_support.hpp"

using bas::Board;
using bas::Cut;
using bas::Instance;
using test_support::make_board;
using test_support::random_board;

namespace {

Instance inst(const std::vector<std::vector<int>>& rows, int k) {
  return Instance{make_board(rows), k};
}

}  // namespace

TEST_CASE("verify_solution replays cuts sequentially") {
  REQUIRE(bas::verify_solution(inst({{1}}, 1), {Cut::horizontal(1, 1, 1)}));
  REQUIRE(bas::verify_solution(Instance{bas::generate_counterexample(4), 2},
                               {Cut::vertical(1, 3, 1), Cut::vertical(2, 4, 2)}));
  REQUIRE_FALSE(bas::verify_solution(inst({{1, 2}}, 2), {Cut::horizontal(1, 1, 2)}));

  SECTION("budget, emptiness, and bounds are all enforced") {
    // too many cuts for the budget
    REQUIRE_FALSE(bas::verify_solution(inst({{1, 1}}, 1),
                                       {Cut::horizontal(1, 1, 1), Cut::horizontal(1, 2, 2)}));
    // board not cleared
    REQUIRE_FALSE(bas::verify_solution(inst({{1, 2}}, 2), {Cut::horizontal(1, 1, 1)}));
    // out-of-bounds cut counts as invalid rather than throwing
    REQUIRE_FALSE(bas::verify_solution(inst({{1}}, 1), {Cut::horizontal(2, 1, 1)}));
    // order matters: the second cut loses its endpoint to the first
    REQUIRE_FALSE(bas::verify_solution(inst({{1, 1, 1}}, 2),
                                       {Cut::horizontal(1, 1, 3), Cut::horizontal(1, 2, 3)}));
    // empty instance needs no cuts
    REQUIRE(bas::verify_solution(Instance{Board(0, 0), 0}, {}));
    REQUIRE(bas::verify_solution(Instance{Board(2, 2), 0}, {}));
  }
}

TEST_CASE("solve on the pinned small instances") {
  SECTION("single button") {
    auto no = bas::solve(inst({{1}}, 0));
    REQUIRE_FALSE(no.yes);
    auto yes = bas::solve(inst({{1}}, 1));
    REQUIRE(yes.yes);
    REQUIRE(yes.certificate == std::vector<Cut>{Cut::horizontal(1, 1, 1)});
    REQUIRE(yes.kernel_certificate == std::vector<Cut>{Cut::horizontal(1, 1, 1)});
  }
  SECTION("alternating 4x2 board needs exactly two vertical cuts") {
    Instance cex{bas::generate_counterexample(4), 2};
    auto report = bas::solve(cex);
    REQUIRE(report.yes);
    REQUIRE(report.certificate ==
            std::vector<Cut>{Cut::vertical(1, 3, 1), Cut::vertical(2, 4, 2)});
    REQUIRE(bas::verify_solution(cex, *report.certificate));
    REQUIRE_FALSE(bas::solve(Instance{cex.board, 1}).yes);
  }
  SECTION("two colors cannot go in one cut") {
    REQUIRE_FALSE(bas::solve(inst({{1, 2}}, 1)).yes);
    auto two = bas::solve(inst({{1, 2}}, 2));
    REQUIRE(two.yes);
    REQUIRE(two.certificate ==
            std::vector<Cut>{Cut::horizontal(1, 1, 1), Cut::horizontal(1, 2, 2)});
  }
  SECTION("kernel no short-circuits the search") {
    auto report = bas::solve(inst({{1, 1}, {2, 2}}, 1));
    REQUIRE_FALSE(report.yes);
    REQUIRE(report.kernel.no_rule == 1);
    REQUIRE(report.nodes_explored == 0);
  }
  SECTION("an all-empty board is a yes with zero cuts") {
    auto report = bas::solve(inst({{0, 0}, {0, 0}}, 0));
    REQUIRE(report.yes);
    REQUIRE(report.certificate->empty());
  }
}

TEST_CASE("certificates are remapped to input coordinates") {
  // the middle row is empty, so rule 3 renumbers rows before the search
  Instance gap = inst({{1}, {0}, {1}}, 1);
  auto report = bas::solve(gap);
  REQUIRE(report.yes);
  REQUIRE(report.kernel_certificate == std::vector<Cut>{Cut::vertical(1, 2, 1)});
  REQUIRE(report.certificate == std::vector<Cut>{Cut::vertical(1, 3, 1)});
  REQUIRE(bas::verify_solution(gap, *report.certificate));

  // with a block reduction in play the reduced-board certificate still holds
  Instance column = inst({{1}, {1}, {1}}, 1);
  auto reduced = bas::solve(column);
  REQUIRE(reduced.yes);
  REQUIRE(bas::verify_solution(reduced.kernel.result, reduced.kernel_certificate));
}

TEST_CASE("oracle answers the pinned instances") {
  REQUIRE(bas::oracle_solve(inst({{1}}, 1)).has_value());
  REQUIRE_FALSE(bas::oracle_solve(inst({{1, 0}, {0, 2}}, 1)).has_value());
  REQUIRE(bas::oracle_solve(Instance{Board(0, 0), 0}).has_value());

  auto witness = bas::oracle_solve(Instance{bas::generate_counterexample(4), 2});
  REQUIRE(witness.has_value());
  REQUIRE(bas::verify_solution(Instance{bas::generate_counterexample(4), 2}, *witness));
}

TEST_CASE("solve equals oracle on every 2x2 board for k up to 2") {
  int boards_checked = 0;
  for (int c11 = 0; c11 <= 2; ++c11)
    for (int c12 = 0; c12 <= 2; ++c12)
      for (int c21 = 0; c21 <= 2; ++c21)
        for (int c22 = 0; c22 <= 2; ++c22) {
          Board b = make_board({{c11, c12}, {c21, c22}});
          ++boards_checked;
          for (int k = 0; k <= 2; ++k) {
            Instance i{b, k};
            bool expected = bas::oracle_solve(i).has_value();
            auto report = bas::solve(i);
            INFO("board " << bas::serialize_board(b) << "k=" << k);
            REQUIRE(report.yes == expected);
            // no block reduction can fire on 2x2 boards, so the remapped
            // certificate must clear the original board
            if (report.yes) REQUIRE(bas::verify_solution(i, *report.certificate));
          }
        }
  REQUIRE(boards_checked == 81);
}

TEST_CASE("solver options do not change answers") {
  bas::SplitMix64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    Instance i{random_board(rng, 3, 3, 60), 1 + static_cast<int>(rng.next() % 3)};
    bool expected = bas::oracle_solve(i).has_value();

    bas::SolveOptions no_kernel;
    no_kernel.use_kernel = false;
    bas::SolveOptions pruned;
    pruned.prune_maximal = true;

    INFO("board " << bas::serialize_board(i.board) << "k=" << i.k);
    REQUIRE(bas::solve(i).yes == expected);
    REQUIRE(bas::solve(i, no_kernel).yes == expected);
    REQUIRE(bas::solve(i, pruned).yes == expected);
  }
}

TEST_CASE("yes answers are monotone in the budget") {
  bas::SplitMix64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    Instance i{random_board(rng, 3, 2, 60), 1 + static_cast<int>(rng.next() % 2)};
    if (bas::solve(i).yes) REQUIRE(bas::solve(Instance{i.board, i.k + 1}).yes);
  }
}

TEST_CASE("every yes is self-certifying on the reduced instance") {
  bas::SplitMix64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    Instance i{random_board(rng, 4, 3, 55), 1 + static_cast<int>(rng.next() % 3)};
    auto report = bas::solve(i);
    if (!report.yes) continue;
    REQUIRE(report.kernel_certificate.size() <= static_cast<std::size_t>(i.k));
    REQUIRE(bas::verify_solution(report.kernel.result, report.kernel_certificate));
    REQUIRE(report.certificate.has_value());
  }
}

TEST_CASE("maximal-cut filter keeps exactly the undominated cuts") {
  // row of three equal buttons: only the full-width cut survives
  auto row = bas::detail::filter_maximal_cuts(
      bas::enumerate_valid_cuts(make_board({{1, 1, 1}})));
  REQUIRE(row == std::vector<Cut>{Cut::horizontal(1, 1, 3)});

  // a single cell inside a vertical pair is dominated across orientations
  auto column = bas::detail::filter_maximal_cuts(
      bas::enumerate_valid_cuts(make_board({{1}, {1}})));
  REQUIRE(column == std::vector<Cut>{Cut::vertical(1, 2, 1)});

  // an isolated button's cut survives
  auto lone = bas::detail::filter_maximal_cuts(
      bas::enumerate_valid_cuts(make_board({{1, 0}, {0, 2}})));
  REQUIRE(lone == std::vector<Cut>{Cut::horizontal(1, 1, 1), Cut::horizontal(2, 2, 2)});
}

TEST_CASE("solve report text") {
  auto yes = bas::solve(inst({{1}}, 1));
  REQUIRE(bas::format_report(yes) ==
          "YES\n"
          "H 1 1 1\n"
          "# kernel rows=1 cols=1 buttons=1\n"
          "# nodes=2\n");

  auto no = bas::solve(inst({{1, 1}, {2, 2}}, 1));
  std::string text = bas::format_report(no);
  REQUIRE(text.rfind("NO\n", 0) == 0);
  REQUIRE(text.find("# nodes=0\n") != std::string::npos);

  auto remapped = bas::solve(inst({{1}, {0}, {1}}, 1));
  std::string remap_text = bas::format_report(remapped);
  REQUIRE(remap_text.find("V 1 3 1\n") != std::string::npos);
  REQUIRE(remap_text.find("# rowmap=1,3\n") != std::string::npos);
  REQUIRE(remap_text.find("# colmap=1\n") != std::string::npos);
}
