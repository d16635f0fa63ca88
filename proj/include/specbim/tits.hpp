#pragma once

#include <optional>
#include <unordered_map>

#include "specbim/coxeter.hpp"

namespace specbim {

/// A point of the realisation space V, i.e. the maximal ideal of the
/// coordinate ring at which bimodules get specialised.
struct Point {
  Vec coords;

  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  std::size_t hash() const { return hash_vec(coords); }
};

struct PointHash {
  std::size_t operator()(const Point& p) const { return p.hash(); }
};

std::string str(const Point& p);

/// Pairings <a, alpha_s^vee> for all generators, as a vector.
Vec wall_pairings(const Realisation& real, const Point& a);

/// Point with prescribed coroot pairings (unique when dim == rank).
Point point_from_pairings(const Realisation& real, const Vec& pairings);

struct TitsCaps {
  int descent = 10000;
  int orbit = 100000;
};

struct FundamentalDomainResult {
  Point rep;       // d, all pairings >= 0
  GroupElement w;  // w(d) = a, built by the descent loop
};

/*
 * Descend a into the fundamental domain D by repeatedly applying the
 * smallest generator with negative pairing. Terminates for every point of
 * the Tits cone; nullopt means the cap was hit, which this algorithm cannot
 * distinguish from a point outside the cone ("undetermined").
 */
std::optional<FundamentalDomainResult> to_fundamental_domain(const Realisation& real,
                                                             const Point& a,
                                                             int cap = 10000);

/// true when a is certified inside the Tits cone; nullopt = undetermined
/// (descent cap hit; this procedure can never certify a negative).
std::optional<bool> is_tits_ideal(const Realisation& real, const Point& a,
                                  int cap = 10000);

/*
 * The stabiliser Coxeter system of a point a in the Tits cone: stab(a) is
 * the conjugate w_min W_I w_min^-1 of the standard parabolic fixing the
 * domain representative d, and S_a = w_min I w_min^-1 is its simple system.
 * w_min is the minimal length representative of the coset w W_I.
 */
struct StabiliserSystem {
  Point base_point;    // a
  Point domain_point;  // d in D
  GroupElement conjugator;  // w_min, w_min(d) = a
  std::vector<int> parabolic_set;          // I, ascending generator indices
  std::vector<Reflection> stab_generators;  // S_a, one per element of I
  CoxeterMatrix local_coxeter_matrix;       // exact product orders on S_a
};

/// Throws std::domain_error if a is not certified in the Tits cone.
StabiliserSystem stabiliser_system(const Realisation& real, const Point& a,
                                   const TitsCaps& caps = {});

struct OrbitPoint {
  Point point;
  GroupElement rep;  // t_p, first breadth-first word with t_p(a) = p
  std::vector<Reflection> local_simple;  // S_p = t_p S_a t_p^-1
};

class OrbitTable {
 public:
  const StabiliserSystem& stabiliser() const { return stab_; }
  const std::vector<OrbitPoint>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }

  /// Index into points(), or -1 when p is not an orbit point.
  int index_of(const Point& p) const;

 private:
  friend std::optional<OrbitTable> orbit_table(const Realisation& real, const Point& a,
                                               const TitsCaps& caps);
  StabiliserSystem stab_;
  std::vector<OrbitPoint> points_;  // breadth-first discovery order; [0] = a
  std::unordered_map<Point, int, PointHash> index_;
};

/// Breadth-first orbit of a with minimal representatives (lexicographic tie
/// break) and conjugated local simple systems. nullopt = orbit cap exceeded.
std::optional<OrbitTable> orbit_table(const Realisation& real, const Point& a,
                                      const TitsCaps& caps = {});

/*
 * Measurement pass for the choice of S_a: checks that each chosen stabiliser
 * generator has minimal Coxeter length among the reflections of stab(a) not
 * generated by the other chosen ones. Requires a finite group (enumerated up
 * to group_word_cap); throws std::domain_error when enumeration is
 * incomplete at that cap.
 */
struct MinimalityItem {
  int parabolic_generator;  // s in I giving this S_a element
  int chosen_length;
  int best_alternative;  // -1 when no alternative reflection exists
  bool minimal;
};

struct MinimalityReport {
  bool all_minimal = true;
  std::vector<MinimalityItem> items;
};

MinimalityReport check_stab_generator_minimality(const Realisation& real,
                                                 const StabiliserSystem& stab,
                                                 int group_word_cap = 64);

}  // namespace specbim
