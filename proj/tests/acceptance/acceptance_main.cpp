// Acceptance runner: executes the reproduction suite and prints one
// PASS/FAIL line per criterion. Exit code 0 only when everything passes.

#include <cstdio>
#include <iostream>

#include "qnum/verify.hpp"

int main() {
  auto results = qnum::run_paper_suite();
  std::cout << qnum::format_results(results);
  const bool ok = qnum::all_pass(results);
  std::cout << (ok ? "acceptance: all criteria satisfied\n"
                   : "acceptance: FAILURES present\n");
  return ok ? 0 : 1;
}
