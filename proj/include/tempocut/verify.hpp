#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tempocut/generators.hpp"

namespace tempocut {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> notes;

  bool ok() const { return passed == total; }
};

/// menger1, duality, sandwich, certificates, reduction, gapfamily, cover, protection.
const std::vector<std::string>& suite_names();

/// `count` instances seeded from `seed`; 0 picks the suite's default count.
/// Throws InputError for unknown suite names.
SuiteResult run_suite(const std::string& name, int count = 0, std::uint64_t seed = 1);

/// Random graph of the verification corpus: 8-12 nodes, T = 10, p = 0.5,
/// source v0 and destination the last node.
Instance corpus_instance(int index, std::uint64_t seed);

/// Fewest delta-removals covering `cs`, by trying all head sets of
/// increasing size over the candidate heads. Small inputs only.
int brute_force_cover(const std::vector<Contact>& cs, int delta);

}  // namespace tempocut
