#pragma once

#include <mutex>
#include <unordered_map>

#include "specbim/engine.hpp"

namespace specbim {

/*
 * A finite-dimensional module over the coordinate ring, given by one exact
 * action matrix per linear coordinate x_1..x_dim of V*. The matrices must
 * pairwise commute; polynomial ring elements then act through evaluation on
 * the commuting family.
 */
struct FinModule {
  int dim_k = 0;
  std::vector<Mat> actions;  // indexed by coordinate
  std::vector<std::string> basis_labels;  // subword tags for audit
};

/// 1-dimensional module K_a: x_i acts by the scalar a_i.
FinModule point_module(const Realisation& real, const Point& a);

/*
 * B_r (x)_R M for a reflection r with root b: the char-0 Demazure splitting
 * R = R^r + R^r * f (f the coroot functional of r, spanning the
 * anti-invariant linear forms) doubles the module on the basis blocks
 * (1 (x) m, f (x) m). Writing a linear coordinate as x_i = P_i + f Q_i with
 * P_i = (x_i + r(x_i))/2 and Q_i = b_i/2, the action of x_i is
 *     [ P_i      Q_i f^2 ]
 *     [ Q_i      P_i     ]
 * with P_i and f^2 evaluated on the existing commuting actions.
 */
FinModule apply_Bs(const Realisation& real, const FinModule& m, const Reflection& r);
FinModule apply_Bs(const Realisation& real, const FinModule& m, int s);

/// Fold apply_Bs over the word right-to-left starting from point_module(a).
FinModule build_bs_module(const Realisation& real, const BSWord& w, const Point& a);

/// Same fold over arbitrary reflection letters, based at p (the oracle
/// realisation of an engine summand B(v) (x) K_p).
FinModule build_bs_module_from_letters(const Realisation& real,
                                       const std::vector<Reflection>& letters,
                                       const Point& p);

/// Twist by g: the action of x_i becomes the action of g^-1(x_i), i.e. the
/// g-row-combination of the existing actions. twist(K_a, g) = K_{ga}.
FinModule twist(const Realisation& real, const FinModule& m, const GroupElement& g);

bool actions_commute(const FinModule& m);

/// dim of the local piece at a point plus its filtration profile
/// [dim V_p, dim m_p V_p, dim m_p^2 V_p, ..., 0].
struct LocalProfile {
  int dim = 0;
  std::vector<int> profile;
};

struct SupportEntry {
  int orbit_index;
  LocalProfile local;
};

struct SupportDecomposition {
  std::vector<SupportEntry> entries;  // ascending orbit index; nonzero dims only
  int total_dim = 0;

  const LocalProfile* at(int orbit_index) const;
};

/*
 * Exact joint generalized eigenspace dimensions over the orbit, with
 * filtration profiles. hint lists orbit indices to try first (any order,
 * duplicates fine); whenever the found dimensions do not exhaust dim_k the
 * remaining orbit points are scanned, and if the total still falls short
 * the support lies outside the orbit: std::domain_error.
 */
SupportDecomposition support_decompose(const Realisation& real, const FinModule& m,
                                       const OrbitTable& table,
                                       const std::vector<int>* hint = nullptr);

/// Filtration profile of a module entirely supported at p (throws if the
/// maximal ideal of p does not act nilpotently).
std::vector<int> whole_module_profile(const FinModule& m, const Point& p);

struct PointComparison {
  int orbit_index;
  int engine_dim = 0;
  int oracle_dim = 0;
  std::vector<int> engine_profile, oracle_profile;
  bool pass = false;
};

struct VerificationReport {
  bool pass = false;
  std::size_t module_dim = 0;
  std::vector<PointComparison> points;  // points touched by either side
  std::string failure;                  // empty on success
};

/// Cross-run cache of per-summand oracle profiles, keyed by the exact point
/// and letter matrices (no hash-only shortcuts). Thread safe.
class SummandProfileCache {
 public:
  std::optional<std::vector<int>> find(const Point& p,
                                       const std::vector<Reflection>& letters) const;
  void store(const Point& p, const std::vector<Reflection>& letters,
             std::vector<int> profile);

 private:
  struct Key {
    Vec point;
    std::vector<Mat> letters;
    bool operator==(const Key& o) const { return point == o.point && letters == o.letters; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  static Key make_key(const Point& p, const std::vector<Reflection>& letters);

  mutable std::mutex mu_;
  std::unordered_map<Key, std::vector<int>, KeyHash> map_;
};

/*
 * The full engine-vs-oracle comparison for one (word, base point) job:
 * builds B(w) (x) K_a by the oracle, decomposes its support exactly, and per
 * orbit point compares dimension and filtration profile against the direct
 * sum of independently built modules for the engine's summands.
 */
VerificationReport verify_decomposition(const Realisation& real, const BSWord& w,
                                        const Point& a, const OrbitTable& table,
                                        SummandProfileCache* cache = nullptr);
VerificationReport verify_decomposition(const Realisation& real, const BSWord& w,
                                        const Point& a, const TitsCaps& caps = {});

}  // namespace specbim
