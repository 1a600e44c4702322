// Acceptance suite: runs the full verification grid and prints one pass/fail
// line per criterion.  Exit code is the number of failing criteria.

#include <cstdlib>
#include <iostream>
#include <string>

#include "kneser/verify.hpp"

int main(int argc, char** argv) {
  kneser::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) options.seed = std::strtoull(argv[++i], nullptr, 10);
    if (arg == "--filter" && i + 1 < argc) options.filter = argv[++i];
  }
  return kneser::print_acceptance(std::cout, options);
}
