#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gradedproj/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact kernel for multi-graded Proj: charts, gluing, and verdict reports"};

  std::string command;
  app.add_option("command", command,
                 "check-relevance | potion-eq | magic2 | magic4 | atlas | functorial | "
                 "closed-immersion | product-check | twist | negligible")
      ->required();
  std::string input_path;
  app.add_option("--input", input_path, "input document (JSON); '-' or empty reads stdin");
  std::string report_path;
  app.add_option("--report", report_path, "write the machine-readable report here");
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "override the sampling seed");
  std::optional<unsigned> samples_flag;
  app.add_option("--samples", samples_flag, "override the sample count");
  std::optional<unsigned> degree_bound_flag;
  app.add_option("--degree-bound", degree_bound_flag, "override the lift degree bound");
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress the human-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string text;
    if (input_path.empty() || input_path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(input_path);
      if (!in) throw gradedproj::SchemaError("cannot read input file: " + input_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }

    gradedproj::ProblemDescription doc = gradedproj::parse_problem(text);
    if (seed_flag) {
      doc.seed = *seed_flag;
    } else if (const char* env = std::getenv("GRADEDPROJ_SEED")) {
      doc.seed = std::strtoull(env, nullptr, 10);
    }
    if (samples_flag) doc.samples = *samples_flag;
    if (degree_bound_flag) doc.degree_bound = *degree_bound_flag;

    auto start = std::chrono::steady_clock::now();
    gradedproj::Report report = gradedproj::run_command(command, doc);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    if (!quiet) std::cout << report.human << "elapsed: " << elapsed.count() << " ms\n";
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) throw gradedproj::SchemaError("cannot write report file: " + report_path);
      out << report.machine.dump(2) << "\n";
    }
    return report.exit_code;
  } catch (const gradedproj::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
