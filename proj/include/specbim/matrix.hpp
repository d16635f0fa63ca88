#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specbim/scalar.hpp"

namespace specbim {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& c, Vec v);
Scalar dot(const Vec& f, const Vec& v);
bool is_zero(const Vec& v);
std::size_t hash_vec(const Vec& v);
std::string str(const Vec& v);

struct VecHash {
  std::size_t operator()(const Vec& v) const { return hash_vec(v); }
};

/// Dense matrix over Scalar, row-major. All arithmetic is exact.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_cols(const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return a_[r * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat& operator*=(const Scalar& c);

  Vec apply(const Vec& v) const;      // column vector action: M v
  Vec apply_row(const Vec& f) const;  // row vector action: f M

  Mat transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  std::size_t hash() const;
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

struct MatHash {
  std::size_t operator()(const Mat& m) const { return m.hash(); }
};

Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);

/// Least k >= 1 with m^k = 1, or nullopt if none up to the cap.
std::optional<int> order_of(const Mat& m, int cap);

/*
 * Exact Gauss-Jordan elimination. Pivots are chosen per column by minimal
 * coefficient size (Scalar::cost) with lowest row index as tie break, which
 * keeps intermediate entries modest and the computation deterministic.
 */
struct EchelonForm {
  Mat rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};

EchelonForm echelon(Mat a);
int rank_of(const Mat& a);

/// Columns form a basis of ker(a); shape cols(a) x nullity.
Mat kernel_basis(const Mat& a);

/// Basis of the column space, as a subset of the original columns.
Mat column_space_basis(const Mat& a);

/// Unique solution X of A X = B; throws std::domain_error unless A has full
/// column rank and the system is consistent.
Mat solve_exact(const Mat& a, const Mat& b);

}  // namespace specbim
