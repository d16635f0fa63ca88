#include "specbim/coxeter.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace specbim {

std::string word_str(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i] + 1);
  }
  return out + ")";
}

void CoxeterMatrix::validate() const {
  if (rank <= 0) throw std::invalid_argument("Coxeter matrix: rank must be positive");
  if (static_cast<int>(m.size()) != rank) {
    throw std::invalid_argument("Coxeter matrix: wrong number of rows");
  }
  for (int s = 0; s < rank; ++s) {
    if (static_cast<int>(m[s].size()) != rank) {
      throw std::invalid_argument("Coxeter matrix: row " + std::to_string(s + 1) +
                                  " has wrong length");
    }
    if (m[s][s] != 1) {
      throw std::invalid_argument("Coxeter matrix: diagonal entry m_" +
                                  std::to_string(s + 1) + std::to_string(s + 1) +
                                  " must be 1");
    }
    for (int t = 0; t < rank; ++t) {
      if (m[s][t] != m[t][s]) {
        throw std::invalid_argument("Coxeter matrix: not symmetric at (" +
                                    std::to_string(s + 1) + "," + std::to_string(t + 1) + ")");
      }
      if (s != t && m[s][t] == 1) {
        throw std::invalid_argument("Coxeter matrix: off-diagonal entry 1 at (" +
                                    std::to_string(s + 1) + "," + std::to_string(t + 1) + ")");
      }
    }
  }
}

namespace {

Scalar golden_ratio() { return Scalar(Rational(1, 2), Rational(1, 2), 5); }

CoxeterMatrix make_cox(std::vector<std::vector<unsigned>> m) {
  CoxeterMatrix c;
  c.rank = static_cast<int>(m.size());
  c.m = std::move(m);
  c.validate();
  return c;
}

Mat pairings_from_entries(const std::vector<std::vector<Scalar>>& rows) {
  std::vector<Vec> v;
  for (const auto& r : rows) v.push_back(Vec(r.begin(), r.end()));
  return Mat::from_rows(v);
}

// Pairing pair (A_st, A_ts) realising a bond of order m over Q(sqrt(d)):
// A_st * A_ts = 4 cos^2(pi/m).
void auto_pairing(unsigned m, Scalar& ast, Scalar& ats, unsigned& d) {
  switch (m) {
    case 2: ast = 0; ats = 0; return;
    case 3: ast = -1; ats = -1; return;
    case 4: ast = -1; ats = -2; return;
    case 6: ast = -1; ats = -3; return;
    case 5:
      ast = -golden_ratio();
      ats = ast;
      d = 5;
      return;
    case CoxeterMatrix::kInfiniteBond: ast = -2; ats = -2; return;
    default:
      throw std::invalid_argument(
          "unsupported field: bond order " + std::to_string(m) +
          " has no pairing in a real quadratic field (supported: 2,3,4,5,6,inf)");
  }
}

}  // namespace

Mat Realisation::pairing_matrix() const {
  Mat a(rank(), rank());
  for (int s = 0; s < rank(); ++s) {
    for (int t = 0; t < rank(); ++t) a(s, t) = dot(coroots_[s], roots_[t]);
  }
  return a;
}

Realisation Realisation::named(const std::string& type, int root_cap) {
  const Scalar phi = golden_ratio();
  if (type == "A1") {
    return from_pairings(make_cox({{1}}), pairings_from_entries({{2}}), 0, type, root_cap);
  }
  if (type == "A1xA1") {
    return from_pairings(make_cox({{1, 2}, {2, 1}}),
                         pairings_from_entries({{2, 0}, {0, 2}}), 0, type, root_cap);
  }
  if (type == "A2") {
    return from_pairings(make_cox({{1, 3}, {3, 1}}),
                         pairings_from_entries({{2, -1}, {-1, 2}}), 0, type, root_cap);
  }
  if (type == "B2") {
    return from_pairings(make_cox({{1, 4}, {4, 1}}),
                         pairings_from_entries({{2, -1}, {-2, 2}}), 0, type, root_cap);
  }
  if (type == "G2") {
    return from_pairings(make_cox({{1, 6}, {6, 1}}),
                         pairings_from_entries({{2, -1}, {-3, 2}}), 0, type, root_cap);
  }
  if (type == "I2(5)") {
    return from_pairings(make_cox({{1, 5}, {5, 1}}),
                         pairings_from_entries({{Scalar(2), -phi}, {-phi, Scalar(2)}}), 5,
                         type, root_cap);
  }
  if (type == "A3") {
    return from_pairings(make_cox({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}),
                         pairings_from_entries({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 0,
                         type, root_cap);
  }
  if (type == "B3") {
    return from_pairings(make_cox({{1, 3, 2}, {3, 1, 4}, {2, 4, 1}}),
                         pairings_from_entries({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}), 0,
                         type, root_cap);
  }
  if (type == "H3") {
    return from_pairings(
        make_cox({{1, 5, 2}, {5, 1, 3}, {2, 3, 1}}),
        pairings_from_entries({{Scalar(2), -phi, Scalar(0)},
                               {-phi, Scalar(2), Scalar(-1)},
                               {Scalar(0), Scalar(-1), Scalar(2)}}),
        5, type, root_cap);
  }
  throw std::invalid_argument("unknown realisation type '" + type + "'");
}

Realisation Realisation::from_coxeter_matrix(const CoxeterMatrix& cox, int root_cap) {
  cox.validate();
  unsigned d = 0;
  Mat a(cox.rank, cox.rank);
  for (int s = 0; s < cox.rank; ++s) a(s, s) = 2;
  for (int s = 0; s < cox.rank; ++s) {
    for (int t = s + 1; t < cox.rank; ++t) {
      Scalar ast, ats;
      auto_pairing(cox.m[s][t], ast, ats, d);
      a(s, t) = ast;
      a(t, s) = ats;
    }
  }
  return from_pairings(cox, a, d, "user", root_cap);
}

Realisation Realisation::from_pairings(const CoxeterMatrix& cox, const Mat& pairings,
                                       unsigned field_d, const std::string& name,
                                       int root_cap) {
  cox.validate();
  const int n = cox.rank;
  if (pairings.rows() != n || pairings.cols() != n) {
    throw std::invalid_argument("pairing matrix has wrong shape");
  }
  std::vector<Vec> roots, coroots;
  for (int s = 0; s < n; ++s) {
    Vec e(n);
    e[s] = 1;
    roots.push_back(std::move(e));
    coroots.push_back(pairings.row(s));
  }
  return custom(cox, roots, coroots, field_d, name, root_cap);
}

Realisation Realisation::custom(const CoxeterMatrix& cox, const std::vector<Vec>& roots,
                                const std::vector<Vec>& coroots, unsigned field_d,
                                const std::string& name, int root_cap) {
  cox.validate();
  const int n = cox.rank;
  if (static_cast<int>(roots.size()) != n || static_cast<int>(coroots.size()) != n) {
    throw std::invalid_argument("need one root and one coroot per generator");
  }
  Realisation r;
  r.cox_ = cox;
  r.dim_ = static_cast<int>(roots[0].size());
  r.field_d_ = field_d;
  r.name_ = name;
  r.roots_ = roots;
  r.coroots_ = coroots;
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(roots[s].size()) != r.dim_ ||
        static_cast<int>(coroots[s].size()) != r.dim_) {
      throw std::invalid_argument("root/coroot dimension mismatch");
    }
    // s(v) = v - <v, alpha_s^vee> alpha_s
    Mat m = Mat::identity(r.dim_);
    for (int i = 0; i < r.dim_; ++i) {
      for (int j = 0; j < r.dim_; ++j) {
        m(i, j) -= roots[s][i] * coroots[s][j];
      }
    }
    r.gens_.push_back(std::move(m));
  }
  r.root_solver_ = Mat::from_cols(roots);
  if (rank_of(r.root_solver_) != n) {
    throw std::invalid_argument("simple roots are linearly dependent");
  }
  r.standard_root_basis_ = r.root_solver_.is_identity();
  r.validate_axioms();
  r.close_roots(root_cap);
  return r;
}

void Realisation::validate_axioms() const {
  const int n = rank();
  for (int s = 0; s < n; ++s) {
    if (pairing(roots_[s], s) != Scalar(2)) {
      throw std::invalid_argument("pairing <alpha_" + std::to_string(s + 1) + ", alpha_" +
                                  std::to_string(s + 1) + "^vee> must be 2");
    }
  }
  const int infinite_bound = 64;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      unsigned m = cox_.m[s][t];
      int cap = m == CoxeterMatrix::kInfiniteBond ? infinite_bound : static_cast<int>(m);
      auto ord = order_of(gens_[s] * gens_[t], cap);
      bool ok = m == CoxeterMatrix::kInfiniteBond
                    ? !ord.has_value()
                    : ord.has_value() && *ord == static_cast<int>(m);
      if (!ok) {
        throw std::invalid_argument(
            "braid relation fails for pair (" + std::to_string(s + 1) + "," +
            std::to_string(t + 1) + "): expected order " +
            (m == CoxeterMatrix::kInfiniteBond ? std::string("inf") : std::to_string(m)) +
            ", found " + (ord ? std::to_string(*ord) : "none up to bound"));
      }
    }
  }
}

std::optional<Vec> Realisation::root_coordinates(const Vec& v) const {
  if (standard_root_basis_) return v;
  try {
    Mat x = solve_exact(root_solver_, Mat::from_cols({v}));
    return x.col(0);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

int Realisation::root_sign(const Vec& v) const {
  auto coords = root_coordinates(v);
  if (!coords) throw std::domain_error("vector outside the span of the simple roots");
  bool pos = false, neg = false;
  for (const auto& c : *coords) {
    int s = c.sign();
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (pos && neg) throw std::domain_error("vector is not a root: mixed coefficient signs");
  if (!pos && !neg) throw std::domain_error("zero vector is not a root");
  return pos ? 1 : -1;
}

Vec Realisation::canonical_root(const Vec& v) const {
  if (root_sign(v) > 0) return v;
  Vec w(v);
  for (auto& e : w) e = -e;
  return w;
}

GroupElement Realisation::identity_element() const {
  return GroupElement{Mat::identity(dim_), {}};
}

GroupElement Realisation::element_from_word(const Word& w) const {
  GroupElement g = identity_element();
  for (int s : w) {
    if (s < 0 || s >= rank()) {
      throw std::invalid_argument("generator index " + std::to_string(s + 1) +
                                  " out of range 1.." + std::to_string(rank()));
    }
    g.matrix = g.matrix * gens_[s];
  }
  g.word = w;
  return g;
}

GroupElement Realisation::multiply(const GroupElement& x, const GroupElement& y) const {
  GroupElement g;
  g.matrix = x.matrix * y.matrix;
  g.word = x.word;
  g.word.insert(g.word.end(), y.word.begin(), y.word.end());
  return g;
}

GroupElement Realisation::inverse(const GroupElement& g) const {
  Word rev(g.word.rbegin(), g.word.rend());
  return element_from_word(rev);
}

GroupElement Realisation::conjugate_by_generator(int s, const GroupElement& g) const {
  GroupElement out;
  out.matrix = gens_[s] * g.matrix * gens_[s];
  out.word.reserve(g.word.size() + 2);
  out.word.push_back(s);
  out.word.insert(out.word.end(), g.word.begin(), g.word.end());
  out.word.push_back(s);
  return out;
}

const std::vector<Reflection>& Realisation::positive_system() const {
  if (!roots_closed_) {
    throw std::logic_error("positive root system was not fully enumerated");
  }
  return reflections_;
}

Reflection Realisation::simple_reflection(int s) const {
  Reflection r;
  r.root = roots_[s];
  r.element = GroupElement{gens_[s], {s}};
  if (roots_closed_) {
    auto len = length(*this, r.element);
    r.length = len ? *len : -1;
  }
  return r;
}

Reflection Realisation::reflection_from(const GroupElement& w, int s) const {
  Reflection r;
  r.root = canonical_root(w.matrix.apply(roots_[s]));
  GroupElement winv = inverse(w);
  r.element.matrix = w.matrix * gens_[s] * winv.matrix;
  r.element.word = w.word;
  r.element.word.push_back(s);
  r.element.word.insert(r.element.word.end(), winv.word.begin(), winv.word.end());
  if (roots_closed_) {
    auto len = length(*this, r.element);
    r.length = len ? *len : -1;
  }
  return r;
}

Reflection Realisation::conjugate_reflection(int s, const Reflection& r) const {
  Reflection out;
  out.root = canonical_root(gens_[s].apply(r.root));
  out.element = conjugate_by_generator(s, r.element);
  if (roots_closed_) {
    auto len = length(*this, out.element);
    out.length = len ? *len : -1;
  }
  return out;
}

void Realisation::close_roots(int cap) {
  std::unordered_map<Vec, int, VecHash> seen;
  reflections_.clear();
  std::deque<int> queue;
  for (int s = 0; s < rank(); ++s) {
    Reflection r;
    r.root = roots_[s];
    r.element = GroupElement{gens_[s], {s}};
    seen.emplace(r.root, static_cast<int>(reflections_.size()));
    queue.push_back(static_cast<int>(reflections_.size()));
    reflections_.push_back(std::move(r));
  }
  roots_closed_ = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int t = 0; t < rank(); ++t) {
      Vec image = canonical_root(gens_[t].apply(reflections_[i].root));
      if (seen.count(image)) continue;
      if (static_cast<int>(reflections_.size()) >= cap) {
        roots_closed_ = false;
        return;
      }
      Reflection r;
      r.root = image;
      r.element = conjugate_by_generator(t, reflections_[i].element);
      seen.emplace(r.root, static_cast<int>(reflections_.size()));
      queue.push_back(static_cast<int>(reflections_.size()));
      reflections_.push_back(std::move(r));
    }
  }
  // inversion count is available once the positive system is complete
  for (auto& r : reflections_) {
    int inv = 0;
    for (const auto& other : reflections_) {
      if (root_sign(r.element.matrix.apply(other.root)) < 0) ++inv;
    }
    r.length = inv;
  }
}

std::optional<int> length(const Realisation& real, const GroupElement& g, int root_cap) {
  if (real.roots_closed()) {
    int inv = 0;
    for (const auto& r : real.positive_system()) {
      if (real.root_sign(g.matrix.apply(r.root)) < 0) ++inv;
    }
    return inv;
  }
  // bounded closure: every inversion of g is a root of depth <= |word|
  const int depth = static_cast<int>(g.word.size());
  std::unordered_map<Vec, int, VecHash> seen;
  std::vector<Vec> level, all;
  for (int s = 0; s < real.rank(); ++s) {
    const Vec& a = real.simple_root(s);
    if (!seen.count(a)) {
      seen.emplace(a, 1);
      level.push_back(a);
      all.push_back(a);
    }
  }
  for (int k = 2; k <= depth; ++k) {
    std::vector<Vec> next;
    for (int s = 0; s < real.rank(); ++s) {
      for (const auto& v : level) {
        Vec image = real.canonical_root(real.generator(s).apply(v));
        if (seen.count(image)) continue;
        if (static_cast<int>(all.size()) >= root_cap) return std::nullopt;
        seen.emplace(image, k);
        next.push_back(image);
        all.push_back(image);
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  int inv = 0;
  for (const auto& v : all) {
    if (real.root_sign(g.matrix.apply(v)) < 0) ++inv;
  }
  return inv;
}

std::optional<std::vector<Reflection>> enumerate_reflections(const Realisation& real,
                                                             int cap) {
  if (real.roots_closed()) return real.positive_system();
  Realisation copy = real;
  copy.close_roots(cap);
  if (!copy.roots_closed()) return std::nullopt;
  return copy.positive_system();
}

GroupEnumeration enumerate_group(const Realisation& real, int max_word_len) {
  GroupEnumeration out;
  std::unordered_map<Mat, int, MatHash> seen;
  GroupElement id = real.identity_element();
  seen.emplace(id.matrix, 0);
  out.elements.push_back(std::move(id));
  std::vector<int> level{0};
  // complete only when some level verifiably adds nothing new
  out.complete = false;
  for (int len = 1; len <= max_word_len; ++len) {
    std::vector<int> next;
    for (int idx : level) {
      for (int s = 0; s < real.rank(); ++s) {
        Mat m = out.elements[idx].matrix * real.generator(s);
        if (seen.count(m)) continue;
        GroupElement g;
        g.word = out.elements[idx].word;
        g.word.push_back(s);
        g.matrix = std::move(m);
        seen.emplace(g.matrix, static_cast<int>(out.elements.size()));
        next.push_back(static_cast<int>(out.elements.size()));
        out.elements.push_back(std::move(g));
      }
    }
    if (next.empty()) {
      out.complete = true;
      break;
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace specbim
