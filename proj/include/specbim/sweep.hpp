#pragma once

#include <functional>

#include "specbim/oracle.hpp"

namespace specbim {

/// All subsets of {0..rank-1}, by size then lexicographically.
std::vector<std::vector<int>> wall_subsets(int rank);

/// Dominant sample point with pairing 0 exactly on the given walls and
/// pairwise distinct positive integer pairings elsewhere (dim == rank only).
Point sample_dominant_point(const Realisation& real, const std::vector<int>& walls);

/// All words over the generators of length 0..max_len, shortlex order.
std::vector<Word> words_up_to(int rank, int max_len);

/// Run fn(0..n-1) on the given number of threads (order unspecified; callers
/// must write results into disjoint slots).
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

/// Thread count from the SPECBIM_THREADS environment variable, else the
/// hardware concurrency, else 1.
int default_thread_count();

struct SweepOptions {
  int max_word_len = 4;
  bool verify = true;
  TitsCaps caps;
  int threads = 1;
};

struct SweepJobRecord {
  std::vector<int> walls;  // 0-based wall subset of the sample point
  Word word;               // 0-based
  bool flag_ok = false;    // per-point dims match the flag prediction
  bool verified = false;   // oracle comparison ran
  bool verify_ok = true;   // and passed (true when not run)
  bool local_simple = false;
  std::string failure;
};

struct SweepReport {
  std::string type_name;
  int total = 0;
  int failures = 0;
  int local_simplicity_flags = 0;
  bool all_ok = true;
  std::vector<SweepJobRecord> jobs;  // subset-major, then shortlex by word
};

/*
 * The batch sweep: for every wall subset of a sampled dominant point and
 * every word up to the length bound, run the engine, check flag consistency,
 * measure local simplicity, and (optionally) verify against the oracle.
 * Individual job failures are recorded; the sweep always completes.
 */
SweepReport run_sweep(const Realisation& real, const SweepOptions& options);

}  // namespace specbim
