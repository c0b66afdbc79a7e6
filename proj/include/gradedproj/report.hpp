#pragma once

#include "gradedproj/schema.hpp"

namespace gradedproj {

// Exit codes: 0 all verdicts pass, 1 some verdict failed, 2 inconclusive
// results present, 3 input error.
struct Report {
  nlohmann::ordered_json machine;  // byte-stable for a fixed input and seed
  std::string human;               // may carry timings
  int exit_code = 0;
};

// command is one of: check-relevance, potion-eq, magic2, magic4, atlas,
// functorial, closed-immersion, product-check, twist, negligible.
Report run_command(const std::string& command, const ProblemDescription& doc);

}  // namespace gradedproj
