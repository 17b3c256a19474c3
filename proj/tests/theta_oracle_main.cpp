// Standalone theta oracle.  Prints the half-norm counts of one of the
// built-in coordinate models in the same tab-separated shape as the
// engine's theta export, so the two outputs can be diffed directly:
//
//   theta_oracle E8 3
//
// counts vectors of E8 = D8 u (D8 + half-ones) by half norm 0..3.

#include <cstdlib>
#include <iostream>
#include <string>

#include "oracles.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: theta_oracle <A1|A1xA1|A2|D4|E8> <max_half_norm>\n";
    return 2;
  }
  try {
    long long max_hn = std::stoll(argv[2]);
    auto counts = oracle::euclidean_theta(argv[1], max_hn);
    for (std::size_t k = 0; k < counts.size(); ++k)
      std::cout << k << "\t" << counts[k] << "\n";
  } catch (const std::exception& e) {
    std::cerr << "theta_oracle: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
