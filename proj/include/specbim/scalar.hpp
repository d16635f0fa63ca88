#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace specbim {

using Rational = mpq_class;

/*
 * Element of the real quadratic field Q(sqrt(d)), stored as a + b*sqrt(d)
 * with exact rational coefficients.
 *
 * d is a squarefree nonnegative integer fixed per value; d == 0 means a
 * plain rational. Values normalise b == 0 to d == 0, so rational constants
 * combine freely with any field while genuinely mixed surds (two different
 * d > 0) are rejected instead of coerced.
 *
 * All arithmetic and comparisons are exact. The order is the one induced by
 * the real embedding with sqrt(d) > 0; signs are decided by exact case
 * analysis (square and compare), never by floating point.
 *
 * Immutable after construction in practice: all operators return new values
 * and compound assignments are the only mutators, so const Scalars are safe
 * to share across threads.
 */
class Scalar {
 public:
  Scalar() : d_(0) {}
  Scalar(long n) : a_(n), d_(0) {}
  Scalar(int n) : a_(n), d_(0) {}
  Scalar(Rational r) : a_(std::move(r)), d_(0) {}
  Scalar(Rational a, Rational b, unsigned d);

  static Scalar fraction(long num, long den);
  static Scalar sqrt_of(unsigned d) { return Scalar(Rational(0), Rational(1), d); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  unsigned surd_base() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Exact sign of the real value: -1, 0 or +1.
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  /// *this += x * y, the inner-loop primitive of all matrix arithmetic.
  void add_mul(const Scalar& x, const Scalar& y);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return compare(o) < 0; }
  bool operator>(const Scalar& o) const { return compare(o) > 0; }
  bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
  bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

  /// -1, 0, +1 according to the order of real embeddings.
  int compare(const Scalar& o) const;

  /// Canonical text form: "p/q" or "p/q+r/s*sqrt(d)" (den 1 printed bare).
  std::string str() const;

  /// Parse the text syntax accepted in configs; throws std::invalid_argument.
  static Scalar parse(const std::string& text);

  std::size_t hash() const;

  /// Rough size metric (total limb count) used for pivot selection.
  std::size_t cost() const;

 private:
  void normalise();

  Rational a_;
  Rational b_;
  unsigned d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace specbim
