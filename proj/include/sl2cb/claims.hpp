#pragma once

// Verification registry: the headline computations the library certifies,
// grouped into ten numbered criteria.  Each criterion re-derives its claims
// from scratch through the public API and reports pass/fail with check counts;
// the acceptance binary and the CLI verification command both print from these
// reports.

#include "sl2cb/fusion.hpp"

#include <string>
#include <vector>

namespace sl2cb {

struct CriterionReport {
  int number = 0;
  std::string title;
  long checks = 0;
  long failed = 0;
  bool pass = true;
  std::vector<std::string> failures;  // first few failing checks, capped
  std::string note;                   // optional extra detail (reported scalars etc.)
};

// Runs all ten criteria.  max_n caps every scan indexed by the number of
// marked points (ranges indexed by g are capped through n = 2g+2); scans never
// shrink below their smallest meaningful instance.  max_n = 22 runs the full
// pinned ranges.
std::vector<CriterionReport> run_all_criteria(RankCache& cache, int max_n = 22);

}  // namespace sl2cb
