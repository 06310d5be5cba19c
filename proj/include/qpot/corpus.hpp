#pragma once

#include <string>
#include <vector>

#include "qpot/json_io.hpp"

namespace qpot {

struct CaseResult {
  std::string name;
  bool match = false;
  std::string computed;
  std::string expected;
  std::string message;  // error text or term-level diff on mismatch
};

struct VerifyReport {
  int total = 0;
  int failures = 0;
  std::vector<CaseResult> results;
};

// Resolution order: QP_CORPUS_DIR environment variable, then the built-in
// location configured at compile time.
std::string corpus_dir();

std::vector<std::string> list_cases(const std::string& root);

// Executes the pipeline described by <root>/<name>/input.json and compares
// the canonical rendering against <root>/<name>/expected.txt, byte-exact.
CaseResult run_case(const std::string& root, const std::string& name);

VerifyReport verify_all(const std::string& root);

// Dispatches an input description to the pipeline; returns canonical text.
std::string run_input(const Json& input);

// Term-level diff of two canonical potential texts (best effort).
std::string diff_canonical(const std::string& expected, const std::string& computed);

}  // namespace qpot
