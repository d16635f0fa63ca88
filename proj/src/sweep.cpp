#include "specbim/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <thread>

namespace specbim {

std::vector<std::vector<int>> wall_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int size = 0; size <= rank; ++size) {
    // lexicographic subsets of the given size
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    while (true) {
      out.push_back(subset);
      if (size == 0) break;
      int i = size - 1;
      while (i >= 0 && subset[i] == rank - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return out;
}

Point sample_dominant_point(const Realisation& real, const std::vector<int>& walls) {
  Vec pairings(real.rank());
  for (int s = 0; s < real.rank(); ++s) pairings[s] = Scalar(s + 1);
  for (int s : walls) {
    if (s < 0 || s >= real.rank()) throw std::invalid_argument("wall index out of range");
    pairings[s] = Scalar(0);
  }
  return point_from_pairings(real, pairings);
}

std::vector<Word> words_up_to(int rank, int max_len) {
  std::vector<Word> out;
  out.push_back({});
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int s = 0; s < rank; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(threads, n);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

int default_thread_count() {
  if (const char* env = std::getenv("SPECBIM_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// flag prediction vs engine summand dims, as exact per-point maps
bool flag_consistent(const Decomposition& dec, const FlagPrediction& flag,
                     const OrbitTable& table) {
  std::map<int, long long> engine;
  for (const auto& s : dec.summands) {
    int idx = table.index_of(s.point);
    if (idx < 0) return false;
    engine[idx] += static_cast<long long>(s.dim());
  }
  std::map<int, long long> predicted;
  for (const auto& [p, c] : flag.counts) {
    int idx = table.index_of(p);
    if (idx < 0) return false;
    predicted[idx] += c;
  }
  return engine == predicted;
}

}  // namespace

SweepReport run_sweep(const Realisation& real, const SweepOptions& options) {
  SweepReport report;
  report.type_name = real.name();

  struct JobInput {
    int subset_index;
    const OrbitTable* table;
    const Point* point;
    SummandProfileCache* cache;
    Word word;
  };

  auto subsets = wall_subsets(real.rank());
  std::vector<std::optional<OrbitTable>> tables;
  std::vector<Point> points;
  std::vector<std::unique_ptr<SummandProfileCache>> caches;
  for (const auto& subset : subsets) {
    Point a = sample_dominant_point(real, subset);
    points.push_back(a);
    tables.push_back(orbit_table(real, a, options.caps));
    caches.push_back(std::make_unique<SummandProfileCache>());
  }

  auto words = words_up_to(real.rank(), options.max_word_len);
  std::vector<JobInput> jobs;
  for (std::size_t si = 0; si < subsets.size(); ++si) {
    for (const auto& w : words) {
      jobs.push_back(JobInput{static_cast<int>(si), tables[si] ? &*tables[si] : nullptr,
                              &points[si], caches[si].get(), w});
    }
  }

  report.jobs.resize(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), options.threads, [&](int i) {
    const JobInput& in = jobs[i];
    SweepJobRecord& rec = report.jobs[i];
    rec.walls = subsets[in.subset_index];
    rec.word = in.word;
    if (!in.table) {
      rec.failure = "orbit cap exceeded";
      return;
    }
    try {
      Decomposition dec = specialise(real, in.word, *in.point, in.table);
      FlagPrediction flag = standard_flag_prediction(real, in.word, *in.point);
      rec.flag_ok = flag_consistent(dec, flag, *in.table);
      if (!rec.flag_ok && rec.failure.empty()) {
        rec.failure = "flag prediction mismatch";
      }
      LocalSimplicityReport ls = check_local_simplicity(dec, *in.table);
      rec.local_simple = ls.all_local_simple;
      if (options.verify) {
        rec.verified = true;
        VerificationReport vr =
            verify_decomposition(real, in.word, *in.point, *in.table, in.cache);
        rec.verify_ok = vr.pass;
        if (!vr.pass && rec.failure.empty()) rec.failure = vr.failure;
      }
    } catch (const std::exception& e) {
      rec.failure = e.what();
      rec.flag_ok = false;
      rec.verify_ok = false;
    }
  });

  for (const auto& rec : report.jobs) {
    ++report.total;
    bool ok = rec.flag_ok && rec.verify_ok && rec.failure.empty();
    if (!ok) {
      ++report.failures;
      report.all_ok = false;
    }
    if (!rec.local_simple) ++report.local_simplicity_flags;
  }
  return report;
}

}  // namespace specbim
