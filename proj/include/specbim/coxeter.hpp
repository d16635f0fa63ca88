#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specbim/matrix.hpp"

namespace specbim {

using Word = std::vector<int>;  // generator indices, 0-based internally

std::string word_str(const Word& w);  // 1-based, e.g. "(2,1,2)"

/// Symmetric Coxeter matrix; entry 0 encodes an infinite bond.
struct CoxeterMatrix {
  static constexpr unsigned kInfiniteBond = 0;

  int rank = 0;
  std::vector<std::vector<unsigned>> m;

  unsigned bond(int s, int t) const { return m[s][t]; }

  /// Throws std::invalid_argument on asymmetry, bad diagonal or bond 1.
  void validate() const;
};

/// Group element carried as an exact matrix plus a witnessing word
/// (possibly non-reduced). Equality and hashing use the matrix only.
struct GroupElement {
  Mat matrix;
  Word word;

  bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
};

/// A reflection, i.e. a conjugate of a generator. root is the positive root
/// it inverts; length is the Coxeter length of element, or -1 when the root
/// system was not fully enumerated.
struct Reflection {
  Vec root;
  GroupElement element;
  int length = -1;

  bool operator==(const Reflection& o) const { return element == o.element; }
};

/*
 * A realisation of a Coxeter system: a vector space with chosen simple
 * roots and coroots satisfying <alpha_s, alpha_s^vee> = 2, together with
 * the reflection representation s(v) = v - <v, alpha_s^vee> alpha_s.
 *
 * Construction validates the defining braid relations exactly: for each
 * pair, (M_s M_t) has order exactly m_st (and no order up to a bound when
 * m_st is infinite). At build time the set of positive roots is closed
 * under the group action up to a cap; when the closure completes the
 * realisation knows all reflections and can compute exact lengths by
 * inversion counting.
 */
class Realisation {
 public:
  /// Built-in types: A1, A1xA1, A2, B2, G2, A3, B3, H3, I2(5).
  static Realisation named(const std::string& type, int root_cap = kDefaultRootCap);

  /// Root-basis realisation of a user Coxeter matrix. Pairings are derived
  /// from the bond orders; bonds outside {2,3,4,5,6,inf} have no pairing in
  /// a real quadratic field and are rejected ("unsupported field").
  static Realisation from_coxeter_matrix(const CoxeterMatrix& cox,
                                         int root_cap = kDefaultRootCap);

  /// Root-basis realisation from an explicit pairing matrix
  /// A[s][t] = <alpha_t, alpha_s^vee> over Q(sqrt(d)).
  static Realisation from_pairings(const CoxeterMatrix& cox, const Mat& pairings,
                                   unsigned field_d, const std::string& name,
                                   int root_cap = kDefaultRootCap);

  /// Fully explicit realisation (dim may exceed rank). Simple roots must be
  /// linearly independent.
  static Realisation custom(const CoxeterMatrix& cox, const std::vector<Vec>& roots,
                            const std::vector<Vec>& coroots, unsigned field_d,
                            const std::string& name, int root_cap = kDefaultRootCap);

  int rank() const { return cox_.rank; }
  int dim() const { return dim_; }
  unsigned field_d() const { return field_d_; }
  const std::string& name() const { return name_; }
  const CoxeterMatrix& coxeter_matrix() const { return cox_; }

  const Vec& simple_root(int s) const { return roots_[s]; }
  const Vec& simple_coroot(int s) const { return coroots_[s]; }
  const Mat& generator(int s) const { return gens_[s]; }

  /// Pairing matrix A[s][t] = <alpha_t, alpha_s^vee>.
  Mat pairing_matrix() const;

  /// <v, alpha_s^vee>
  Scalar pairing(const Vec& v, int s) const { return dot(coroots_[s], v); }

  GroupElement identity_element() const;
  GroupElement element_from_word(const Word& w) const;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement conjugate_by_generator(int s, const GroupElement& g) const;

  /// True when the positive root closure completed within the cap.
  bool roots_closed() const { return roots_closed_; }
  const std::vector<Reflection>& positive_system() const;

  /// +1 / -1 for positive / negative roots; throws for vectors that are not
  /// in the root lattice with uniform sign.
  int root_sign(const Vec& v) const;
  Vec canonical_root(const Vec& v) const;  // positive representative of {v, -v}

  /// Reflection data for a root image w(alpha_s); element = w s w^-1.
  Reflection reflection_from(const GroupElement& w, int s) const;
  Reflection simple_reflection(int s) const;
  Reflection conjugate_reflection(int s, const Reflection& r) const;

  static constexpr int kDefaultRootCap = 2000;

 private:
  Realisation() = default;
  void validate_axioms() const;
  void close_roots(int cap);
  std::optional<Vec> root_coordinates(const Vec& v) const;

  friend std::optional<std::vector<Reflection>> enumerate_reflections(
      const Realisation& real, int cap);

  CoxeterMatrix cox_;
  int dim_ = 0;
  unsigned field_d_ = 0;
  std::string name_;
  std::vector<Vec> roots_, coroots_;
  std::vector<Mat> gens_;

  bool roots_closed_ = false;
  bool standard_root_basis_ = false;
  std::vector<Reflection> reflections_;  // positive system, discovery order
  Mat root_solver_;  // columns = simple roots
};

/// Coxeter length of g, counted as inversions in the root system. For
/// realisations whose root system was not fully enumerated the count uses a
/// bounded closure and returns nullopt when the bound is exceeded.
std::optional<int> length(const Realisation& real, const GroupElement& g,
                          int root_cap = Realisation::kDefaultRootCap);

/// All reflections (one per positive root) in discovery order, or nullopt
/// when the root system exceeds the cap.
std::optional<std::vector<Reflection>> enumerate_reflections(
    const Realisation& real, int cap = Realisation::kDefaultRootCap);

struct GroupEnumeration {
  std::vector<GroupElement> elements;  // breadth-first, lexicographic words
  bool complete = false;
};

/// Breadth-first enumeration of the group, words up to the given length.
GroupEnumeration enumerate_group(const Realisation& real, int max_word_len);

}  // namespace specbim
