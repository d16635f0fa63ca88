#include "specbim/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace specbim {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

void check_same_size(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector size mismatch");
}

}  // namespace

Vec operator+(const Vec& x, const Vec& y) {
  check_same_size(x, y);
  Vec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec operator-(const Vec& x, const Vec& y) {
  check_same_size(x, y);
  Vec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec operator*(const Scalar& c, Vec v) {
  for (auto& e : v) e *= c;
  return v;
}

Scalar dot(const Vec& f, const Vec& v) {
  check_same_size(f, v);
  Scalar r;
  for (std::size_t i = 0; i < f.size(); ++i) r.add_mul(f[i], v[i]);
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& e : v) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::size_t hash_vec(const Vec& v) {
  std::size_t h = v.size();
  for (const auto& e : v) h = mix(h, e.hash());
  return h;
}

std::string str(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) {
      throw std::invalid_argument("ragged rows");
    }
    for (int c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) {
    if (static_cast<int>(cols[c].size()) != m.rows_) {
      throw std::invalid_argument("ragged columns");
    }
    for (int r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Mat::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vec Mat::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j).add_mul(x, o(k, j));
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  Mat r(*this);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  Mat r(*this);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat& Mat::operator*=(const Scalar& c) {
  for (auto& e : a_) e *= c;
  return *this;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("matrix/vector shape mismatch");
  }
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r[i].add_mul((*this)(i, j), v[j]);
  }
  return r;
}

Vec Mat::apply_row(const Vec& f) const {
  if (static_cast<int>(f.size()) != rows_) {
    throw std::invalid_argument("matrix/vector shape mismatch");
  }
  Vec r(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; j < cols_; ++j) r[j].add_mul(f[i], (*this)(i, j));
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  static const Scalar one(1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? (*this)(i, j) != one : !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Mat::is_zero() const {
  for (const auto& e : a_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::size_t Mat::hash() const {
  std::size_t h = mix(rows_, cols_);
  for (const auto& e : a_) h = mix(h, e.hash());
  return h;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
  }
  os << "]";
  return os.str();
}

Mat hstack(const Mat& x, const Mat& y) {
  if (x.cols() == 0 && x.rows() == 0) return y;
  if (y.cols() == 0 && y.rows() == 0) return x;
  if (x.rows() != y.rows()) throw std::invalid_argument("hstack row mismatch");
  Mat r(x.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
    for (int j = 0; j < y.cols(); ++j) r(i, x.cols() + j) = y(i, j);
  }
  return r;
}

Mat vstack(const Mat& x, const Mat& y) {
  if (x.rows() == 0 && x.cols() == 0) return y;
  if (y.rows() == 0 && y.cols() == 0) return x;
  if (x.cols() != y.cols()) throw std::invalid_argument("vstack col mismatch");
  Mat r(x.rows() + y.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
  }
  for (int i = 0; i < y.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) r(x.rows() + i, j) = y(i, j);
  }
  return r;
}

std::optional<int> order_of(const Mat& m, int cap) {
  if (m.rows() != m.cols()) throw std::invalid_argument("order of non-square matrix");
  Mat p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

EchelonForm echelon(Mat a) {
  EchelonForm out;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    std::size_t best = 0;
    for (int i = r; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      std::size_t cost = a(i, c).cost();
      if (pivot < 0 || cost < best) {
        pivot = i;
        best = cost;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = c; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
    }
    Scalar inv = Scalar(1) / a(r, c);
    a(r, c) = 1;
    for (int j = c + 1; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = -a(i, c);
      a(i, c) = 0;
      for (int j = c + 1; j < cols; ++j) a(i, j).add_mul(f, a(r, j));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(a);
  return out;
}

int rank_of(const Mat& a) { return echelon(a).rank; }

Mat kernel_basis(const Mat& a) {
  const int n = a.cols();
  if (a.rows() == 0) return Mat::identity(n);
  EchelonForm e = echelon(a);
  std::vector<int> pivot_of_col(n, -1);
  for (int i = 0; i < e.rank; ++i) pivot_of_col[e.pivot_cols[i]] = i;
  Mat k(n, n - e.rank);
  int out = 0;
  for (int c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    k(c, out) = 1;
    for (int i = 0; i < e.rank; ++i) k(e.pivot_cols[i], out) = -e.rref(i, c);
    ++out;
  }
  return k;
}

Mat column_space_basis(const Mat& a) {
  EchelonForm e = echelon(a);
  Mat b(a.rows(), e.rank);
  for (int i = 0; i < e.rank; ++i) {
    for (int r = 0; r < a.rows(); ++r) b(r, i) = a(r, e.pivot_cols[i]);
  }
  return b;
}

Mat solve_exact(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  EchelonForm e = echelon(hstack(a, b));
  for (int c : e.pivot_cols) {
    if (c >= a.cols()) throw std::domain_error("inconsistent linear system");
  }
  if (e.rank != a.cols()) throw std::domain_error("solve: matrix lacks full column rank");
  Mat x(a.cols(), b.cols());
  for (int i = 0; i < e.rank; ++i) {
    for (int j = 0; j < b.cols(); ++j) x(e.pivot_cols[i], j) = e.rref(i, a.cols() + j);
  }
  return x;
}

}  // namespace specbim
