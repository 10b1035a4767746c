// Command-line front end. Subcommands: solve, kernelize, gen, verify, bench.
// Exit codes: 0 for yes/valid/success, 1 for no/invalid, 2 for usage, parse,
// or I/O errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bas/bas.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("cannot write file: " + path);
}

// A solution file is the cut lines of a solve report: blank lines and '#'
// comments are ignored, and a leading YES line is allowed. A NO answer has
// no cuts to check, so it is rejected outright.
std::vector<bas::Cut> parse_solution(std::string_view text) {
  std::vector<bas::Cut> cuts;
  bool at_first_content = true;
  for (std::string_view line : bas::detail::split_lines(text)) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (bas::detail::blank(line)) continue;
    if (line.front() == '#') continue;
    if (at_first_content && line == "YES") {
      at_first_content = false;
      continue;
    }
    if (at_first_content && line == "NO")
      throw bas::ParseError("solution file answers NO; there are no cuts to verify");
    cuts.push_back(bas::parse_cut(line));
    at_first_content = false;
  }
  return cuts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the orthogonal buttons-and-scissors decision problem"};
  app.require_subcommand(1);

  int k = 0;
  std::string board_path;
  bool no_kernel = false;
  bool prune_maximal = false;
  auto* solve_cmd = app.add_subcommand("solve", "Decide a board and print a certificate");
  solve_cmd->add_option("--k", k, "Cut budget")->required();
  solve_cmd->add_flag("--no-kernel", no_kernel, "Search without reducing first");
  solve_cmd->add_flag("--prune-maximal", prune_maximal,
                      "Branch only on inclusion-maximal cuts");
  solve_cmd->add_option("board-file", board_path, "Board file")->required();

  auto* kernelize_cmd = app.add_subcommand("kernelize", "Reduce a board and print the result");
  kernelize_cmd->add_option("--k", k, "Cut budget")->required();
  kernelize_cmd->add_option("board-file", board_path, "Board file")->required();

  bas::GenParams gen_params;
  int counterexample_size = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Print a deterministic random board");
  gen_cmd->add_option("--rows", gen_params.rows, "Board rows");
  gen_cmd->add_option("--cols", gen_params.cols, "Board columns");
  gen_cmd->add_option("--colors", gen_params.colors, "Color count");
  gen_cmd->add_option("--density", gen_params.density, "Occupancy probability in [0,1]");
  gen_cmd->add_option("--seed", gen_params.seed, "PRNG seed");
  gen_cmd->add_option("--counterexample", counterexample_size,
                      "Emit the alternating Nx2 board instead (N even)");

  std::string solution_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against a board");
  verify_cmd->add_option("--k", k, "Cut budget")->required();
  verify_cmd->add_option("board-file", board_path, "Board file")->required();
  verify_cmd->add_option("solution-file", solution_path, "Solution file")->required();

  std::string suite_path;
  std::string csv_path;
  auto* bench_cmd = app.add_subcommand("bench", "Run a suite file and write CSV records");
  bench_cmd->add_option("suite-file", suite_path, "Suite file")->required();
  bench_cmd->add_option("--out", csv_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve_cmd->parsed()) {
      bas::Instance inst{bas::parse_board(read_file(board_path)), k};
      bas::SolveOptions options;
      options.use_kernel = !no_kernel;
      options.prune_maximal = prune_maximal;
      bas::SolveReport report = bas::solve(inst, options);
      std::cout << bas::format_report(report);
      return report.yes ? 0 : 1;
    }
    if (kernelize_cmd->parsed()) {
      bas::Instance inst{bas::parse_board(read_file(board_path)), k};
      bas::KernelResult kr = bas::kernelize(inst);
      std::cout << bas::format_kernel_result(kr);
      return kr.is_no() ? 1 : 0;
    }
    if (gen_cmd->parsed()) {
      if (gen_cmd->count("--counterexample") > 0) {
        std::cout << bas::serialize_board(bas::generate_counterexample(counterexample_size));
        return 0;
      }
      for (const char* name : {"--rows", "--cols", "--colors", "--density", "--seed"}) {
        if (gen_cmd->count(name) == 0) {
          std::cerr << "gen: " << name << " is required unless --counterexample is given\n";
          return 2;
        }
      }
      std::cout << bas::serialize_board(bas::generate_instance(gen_params));
      return 0;
    }
    if (verify_cmd->parsed()) {
      bas::Instance inst{bas::parse_board(read_file(board_path)), k};
      std::vector<bas::Cut> cuts = parse_solution(read_file(solution_path));
      bool ok = bas::verify_solution(inst, cuts);
      std::cout << (ok ? "VALID\n" : "INVALID\n");
      return ok ? 0 : 1;
    }
    if (bench_cmd->parsed()) {
      auto entries = bas::parse_suite(read_file(suite_path));
      auto records = bas::run_benchmark(entries);
      write_file(csv_path, bas::format_csv(records));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
