#pragma once

#include <cstdint>

#include "coword/cowordism.hpp"

namespace coword {

struct LawOptions {
  std::uint64_t seed = 1;
  int cases = 500;
  int max_size = 6;  // boundary cardinality of every object
  int letters = 3;
  bool mutant = false;  // compose reverses every label it produces
};

struct LawResult {
  std::string law;
  int cases = 0;
  int failures = 0;
  std::string counterexample;  // first failing instance, rendered as text
};

std::vector<LawResult> run_laws(const LawOptions& opts);
std::string law_report(const std::vector<LawResult>& results);

}  // namespace coword
