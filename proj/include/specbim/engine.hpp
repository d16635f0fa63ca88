#pragma once

#include "specbim/tits.hpp"

namespace specbim {

/// A Bott-Samelson word: the sequence of simple reflections defining
/// B(w) = R (x)_{R^s} R (x)_{R^t} ... (x)_{R^u} R. Indices are 0-based.
using BSWord = Word;

enum class RecursionCase { Prepend, Keep, Conjugate };

struct TraceStep {
  int generator;
  RecursionCase kind;
};

std::string trace_str(const std::vector<TraceStep>& trace);

/*
 * One predicted direct summand of B(w) (x) K_a: the module B(v) (x) K_p for
 * an orbit point p and a sequence v of reflections fixing p. Its dimension
 * over K is 2^{|v|}.
 */
struct Summand {
  Point point;
  std::vector<Reflection> letters;
  bool in_local_simple_system = false;  // every letter in the canonical S_p
  std::vector<TraceStep> origin_trace;

  std::size_t dim() const { return std::size_t{1} << letters.size(); }
};

struct Decomposition {
  BSWord source_word;
  Point base_point;
  std::vector<Summand> summands;

  std::size_t total_dim() const;
};

/*
 * The predicted decomposition of B(w) (x) K_a, by recursion on the word read
 * right to left. Empty word: the single summand (a, ()). Prepending s to a
 * decomposed tail maps each tail summand (p, v) to
 *   - (p, s v)             when s fixes p ("case 1"), or
 *   - (p, v) + (sp, svs)   when it does not ("case 2"),
 * where svs conjugates every letter of v by s.
 *
 * When a table is supplied the in_local_simple_system flags are filled in;
 * the recursion itself never needs it.
 */
Decomposition specialise(const Realisation& real, const BSWord& w, const Point& a,
                         const OrbitTable* table = nullptr);

/// Sub-multiset of summands at p; throws if p is not an orbit point.
std::vector<Summand> res_point(const Decomposition& dec, const OrbitTable& table,
                               const Point& p);

/// Conjugate every letter by the generator s (exact matrices; the root maps
/// to the canonical representative of its s-image).
std::vector<Reflection> conjugate_word(const Realisation& real, int s,
                                       const std::vector<Reflection>& v);

/*
 * Multiplicity of each point among the 2^n subword evaluations of w on a.
 * This is the per-point dimension count the standard flag predicts for the
 * specialised bimodule. Entries appear in first-encounter order of the fold.
 */
struct FlagPrediction {
  std::vector<std::pair<Point, long long>> counts;

  long long count_for(const Point& p) const;
};

FlagPrediction standard_flag_prediction(const Realisation& real, const BSWord& w,
                                        const Point& a);

/// Per-summand test: does every letter lie in the canonical local simple
/// system S_p of its point? Reported, never asserted.
struct LocalSimplicityReport {
  bool all_local_simple = true;
  std::vector<bool> per_summand;
  int flagged = 0;
};

LocalSimplicityReport check_local_simplicity(const Decomposition& dec,
                                             const OrbitTable& table);

}  // namespace specbim
