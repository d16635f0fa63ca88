#include "specbim/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace specbim {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

void check_module(const Realisation& real, const FinModule& m) {
  if (static_cast<int>(m.actions.size()) != real.dim()) {
    throw std::invalid_argument("module has wrong number of action matrices");
  }
  for (const auto& x : m.actions) {
    if (x.rows() != m.dim_k || x.cols() != m.dim_k) {
      throw std::invalid_argument("action matrix shape mismatch");
    }
  }
}

// (X_i - c) * B without forming the shifted matrix
Mat shifted_apply(const Mat& x, const Scalar& c, const Mat& b) {
  Mat out = x * b;
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      Scalar t = c;
      t *= b(i, j);
      out(i, j) -= t;
    }
  }
  return out;
}

Mat shifted(const Mat& x, const Scalar& c) {
  Mat out = x;
  for (int i = 0; i < out.rows(); ++i) out(i, i) -= c;
  return out;
}

FinModule apply_Bs_impl(const Realisation& real, const FinModule& m, const Vec& root,
                        const Vec& coroot, const Mat& refl) {
  check_module(real, m);
  const int n = real.dim();
  const int k = m.dim_k;
  if (dot(coroot, root) != Scalar(2)) {
    throw std::invalid_argument("malformed reflection: <root, coroot> != 2");
  }

  // f = coroot functional evaluated on the module
  Mat f(k, k);
  for (int j = 0; j < n; ++j) {
    if (coroot[j].is_zero()) continue;
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) f(r, c).add_mul(coroot[j], m.actions[j](r, c));
    }
  }
  Mat f2 = f * f;

  const Scalar half = Scalar::fraction(1, 2);
  FinModule out;
  out.dim_k = 2 * k;
  out.actions.reserve(n);
  for (int i = 0; i < n; ++i) {
    // invariant part P_i = (x_i + r(x_i))/2 evaluated on the module
    Mat p(k, k);
    for (int j = 0; j < n; ++j) {
      Scalar c = refl(i, j);
      if (i == j) c += 1;
      c *= half;
      if (c.is_zero()) continue;
      for (int r = 0; r < k; ++r) {
        for (int cc = 0; cc < k; ++cc) p(r, cc).add_mul(c, m.actions[j](r, cc));
      }
    }
    Scalar q = root[i] * half;

    Mat a(2 * k, 2 * k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        a(r, c) = p(r, c);
        a(k + r, k + c) = p(r, c);
        if (!q.is_zero()) a(r, k + c) = q * f2(r, c);
      }
      if (!q.is_zero()) a(k + r, r) = q;
    }
    out.actions.push_back(std::move(a));
  }
  out.basis_labels.reserve(2 * k);
  for (const auto& l : m.basis_labels) out.basis_labels.push_back("0" + l);
  for (const auto& l : m.basis_labels) out.basis_labels.push_back("1" + l);
  return out;
}

std::vector<int> profile_of_operators(const std::vector<Mat>& ops, int dim) {
  std::vector<int> profile{dim};
  Mat u = Mat::identity(dim);
  while (profile.back() > 0) {
    Mat h;
    for (const auto& r : ops) h = hstack(h, r * u);
    u = column_space_basis(h);
    if (u.cols() >= profile.back()) {
      throw std::domain_error("maximal ideal does not act nilpotently");
    }
    profile.push_back(u.cols());
  }
  return profile;
}

}  // namespace

FinModule point_module(const Realisation& real, const Point& a) {
  if (static_cast<int>(a.coords.size()) != real.dim()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  FinModule m;
  m.dim_k = 1;
  for (int i = 0; i < real.dim(); ++i) {
    Mat x(1, 1);
    x(0, 0) = a.coords[i];
    m.actions.push_back(std::move(x));
  }
  m.basis_labels.push_back("");
  return m;
}

FinModule apply_Bs(const Realisation& real, const FinModule& m, const Reflection& r) {
  // recover the coroot functional from the reflection matrix:
  // (1 - M)v = <v, coroot> root, so row k of (1 - M) is root_k * coroot
  int k = -1;
  for (int i = 0; i < real.dim(); ++i) {
    if (!r.root[i].is_zero()) {
      k = i;
      break;
    }
  }
  if (k < 0) throw std::invalid_argument("reflection has zero root");
  Vec coroot(real.dim());
  for (int j = 0; j < real.dim(); ++j) {
    Scalar e = j == k ? Scalar(1) : Scalar(0);
    e -= r.element.matrix(k, j);
    coroot[j] = e / r.root[k];
  }
  return apply_Bs_impl(real, m, r.root, coroot, r.element.matrix);
}

FinModule apply_Bs(const Realisation& real, const FinModule& m, int s) {
  if (s < 0 || s >= real.rank()) {
    throw std::invalid_argument("generator index " + std::to_string(s + 1) +
                                " out of range 1.." + std::to_string(real.rank()));
  }
  return apply_Bs_impl(real, m, real.simple_root(s), real.simple_coroot(s),
                       real.generator(s));
}

FinModule build_bs_module(const Realisation& real, const BSWord& w, const Point& a) {
  FinModule m = point_module(real, a);
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    m = apply_Bs(real, m, w[i]);
  }
  return m;
}

FinModule build_bs_module_from_letters(const Realisation& real,
                                       const std::vector<Reflection>& letters,
                                       const Point& p) {
  FinModule m = point_module(real, p);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    m = apply_Bs(real, m, *it);
  }
  return m;
}

FinModule twist(const Realisation& real, const FinModule& m, const GroupElement& g) {
  check_module(real, m);
  const int n = real.dim();
  FinModule out;
  out.dim_k = m.dim_k;
  out.basis_labels = m.basis_labels;
  for (int i = 0; i < n; ++i) {
    Mat x(m.dim_k, m.dim_k);
    for (int j = 0; j < n; ++j) {
      const Scalar& c = g.matrix(i, j);
      if (c.is_zero()) continue;
      for (int r = 0; r < m.dim_k; ++r) {
        for (int cc = 0; cc < m.dim_k; ++cc) x(r, cc).add_mul(c, m.actions[j](r, cc));
      }
    }
    out.actions.push_back(std::move(x));
  }
  return out;
}

bool actions_commute(const FinModule& m) {
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    for (std::size_t j = i + 1; j < m.actions.size(); ++j) {
      if (m.actions[i] * m.actions[j] != m.actions[j] * m.actions[i]) return false;
    }
  }
  return true;
}

const LocalProfile* SupportDecomposition::at(int orbit_index) const {
  for (const auto& e : entries) {
    if (e.orbit_index == orbit_index) return &e.local;
  }
  return nullptr;
}

namespace {

// Caches the expensive full-size kernels per (coordinate, eigenvalue),
// shared across the candidate points of one module.
struct FirstKernelCache {
  // (coordinate index, eigenvalue) -> kernel basis of (X_i - c)
  std::vector<std::vector<std::pair<Scalar, Mat>>> slots;

  const Mat& get(const FinModule& m, int i, const Scalar& c) {
    if (slots.empty()) slots.resize(m.actions.size());
    for (const auto& [val, ker] : slots[i]) {
      if (val == c) return ker;
    }
    slots[i].emplace_back(c, kernel_basis(shifted(m.actions[i], c)));
    return slots[i].back().second;
  }
};

// basis of the joint eigenspace for the eigenvalue tuple p
Mat joint_eigenspace(const FinModule& m, const Point& p, FirstKernelCache& cache) {
  Mat b;
  bool full = true;
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    if (full) {
      b = cache.get(m, static_cast<int>(i), p.coords[i]);
      full = false;
    } else {
      if (b.cols() == 0) return b;
      Mat k = kernel_basis(shifted_apply(m.actions[i], p.coords[i], b));
      if (k.cols() == 0) return Mat(m.dim_k, 0);
      b = b * k;
    }
  }
  if (full) return Mat::identity(m.dim_k);  // no coordinates at all
  return b;
}

// extend the joint eigenspace to the joint generalized eigenspace by
// iterated preimages: V_{k+1} = { v : (X_i - p_i) v in V_k for all i }
Mat joint_generalized_eigenspace(const FinModule& m, const Point& p,
                                 FirstKernelCache& cache) {
  Mat v = joint_eigenspace(m, p, cache);
  while (v.cols() > 0 && v.cols() < m.dim_k) {
    Mat ann = kernel_basis(v.transpose()).transpose();  // rows annihilating V_k
    Mat stacked;
    for (std::size_t i = 0; i < m.actions.size(); ++i) {
      Mat rows = ann * shifted(m.actions[i], p.coords[i]);
      stacked = vstack(stacked, rows);
    }
    Mat next = kernel_basis(stacked);
    if (next.cols() == v.cols()) break;
    v = std::move(next);
  }
  return v;
}

LocalProfile local_data(const FinModule& m, const Point& p, FirstKernelCache& cache) {
  Mat v = joint_generalized_eigenspace(m, p, cache);
  LocalProfile out;
  out.dim = v.cols();
  if (out.dim == 0) {
    out.profile = {0};
    return out;
  }
  // restrict each (X_i - p_i) to the invariant subspace V_p
  std::vector<Mat> restricted;
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    restricted.push_back(solve_exact(v, shifted_apply(m.actions[i], p.coords[i], v)));
  }
  out.profile = profile_of_operators(restricted, out.dim);
  return out;
}

}  // namespace

SupportDecomposition support_decompose(const Realisation& real, const FinModule& m,
                                       const OrbitTable& table,
                                       const std::vector<int>* hint) {
  check_module(real, m);
  SupportDecomposition out;
  FirstKernelCache cache;
  std::vector<bool> done(table.size(), false);
  std::map<int, LocalProfile> found;

  auto eval = [&](int idx) {
    if (idx < 0 || idx >= table.size() || done[idx]) return;
    done[idx] = true;
    LocalProfile lp = local_data(m, table.points()[idx].point, cache);
    if (lp.dim > 0) {
      out.total_dim += lp.dim;
      found.emplace(idx, std::move(lp));
    }
  };

  if (hint) {
    for (int idx : *hint) {
      if (out.total_dim == m.dim_k) break;
      eval(idx);
    }
  }
  // joint generalized eigenspaces are independent, so once the dimensions
  // exhaust dim_k no other point can carry anything
  for (int idx = 0; idx < table.size() && out.total_dim < m.dim_k; ++idx) eval(idx);

  if (out.total_dim != m.dim_k) {
    throw std::domain_error("support outside orbit: local dimensions sum to " +
                            std::to_string(out.total_dim) + " of " +
                            std::to_string(m.dim_k));
  }
  for (auto& [idx, lp] : found) out.entries.push_back(SupportEntry{idx, std::move(lp)});
  return out;
}

std::vector<int> whole_module_profile(const FinModule& m, const Point& p) {
  std::vector<Mat> ops;
  for (std::size_t i = 0; i < m.actions.size(); ++i) {
    ops.push_back(shifted(m.actions[i], p.coords[i]));
  }
  try {
    return profile_of_operators(ops, m.dim_k);
  } catch (const std::domain_error&) {
    throw std::domain_error("module is not supported entirely at the given point");
  }
}

std::size_t SummandProfileCache::KeyHash::operator()(const Key& k) const {
  std::size_t h = hash_vec(k.point);
  for (const auto& m : k.letters) h = mix(h, m.hash());
  return h;
}

SummandProfileCache::Key SummandProfileCache::make_key(
    const Point& p, const std::vector<Reflection>& letters) {
  Key k;
  k.point = p.coords;
  for (const auto& r : letters) k.letters.push_back(r.element.matrix);
  return k;
}

std::optional<std::vector<int>> SummandProfileCache::find(
    const Point& p, const std::vector<Reflection>& letters) const {
  Key k = make_key(p, letters);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(k);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void SummandProfileCache::store(const Point& p, const std::vector<Reflection>& letters,
                                std::vector<int> profile) {
  Key k = make_key(p, letters);
  std::lock_guard<std::mutex> lock(mu_);
  map_.emplace(std::move(k), std::move(profile));
}

namespace {

void add_padded(std::vector<int>& acc, const std::vector<int>& p) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += p[i];
}

std::string profile_str(const std::vector<int>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

}  // namespace

VerificationReport verify_decomposition(const Realisation& real, const BSWord& w,
                                        const Point& a, const OrbitTable& table,
                                        SummandProfileCache* cache) {
  VerificationReport rep;
  Decomposition dec = specialise(real, w, a, &table);
  FlagPrediction flag = standard_flag_prediction(real, w, a);
  FinModule m = build_bs_module(real, w, a);
  rep.module_dim = static_cast<std::size_t>(m.dim_k);

  std::vector<int> hint;
  for (const auto& [p, c] : flag.counts) {
    int idx = table.index_of(p);
    if (idx < 0) throw std::logic_error("subword evaluation escaped the orbit");
    hint.push_back(idx);
  }

  SupportDecomposition sup;
  try {
    sup = support_decompose(real, m, table, &hint);
  } catch (const std::domain_error& e) {
    rep.pass = false;
    rep.failure = e.what();
    return rep;
  }

  // engine side: per-point dimension and summed summand profiles
  struct EngineData {
    int dim = 0;
    std::vector<int> profile;
  };
  std::map<int, EngineData> engine;
  for (const auto& summand : dec.summands) {
    int idx = table.index_of(summand.point);
    if (idx < 0) throw std::logic_error("summand point escaped the orbit");
    std::vector<int> prof;
    if (cache) {
      if (auto hit = cache->find(summand.point, summand.letters)) {
        prof = std::move(*hit);
      }
    }
    if (prof.empty()) {
      FinModule n = build_bs_module_from_letters(real, summand.letters, summand.point);
      prof = whole_module_profile(n, summand.point);
      if (cache) cache->store(summand.point, summand.letters, prof);
    }
    auto& data = engine[idx];
    data.dim += static_cast<int>(summand.dim());
    add_padded(data.profile, prof);
  }

  rep.pass = true;
  std::vector<int> indices;
  for (const auto& e : sup.entries) indices.push_back(e.orbit_index);
  for (const auto& [idx, data] : engine) {
    if (!sup.at(idx)) indices.push_back(idx);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  for (int idx : indices) {
    PointComparison pc;
    pc.orbit_index = idx;
    if (const LocalProfile* lp = sup.at(idx)) {
      pc.oracle_dim = lp->dim;
      pc.oracle_profile = lp->profile;
    } else {
      pc.oracle_profile = {0};
    }
    auto it = engine.find(idx);
    if (it != engine.end()) {
      pc.engine_dim = it->second.dim;
      pc.engine_profile = it->second.profile;
    } else {
      pc.engine_profile = {0};
    }
    pc.pass = pc.engine_dim == pc.oracle_dim && pc.engine_profile == pc.oracle_profile;
    if (!pc.pass) {
      rep.pass = false;
      if (rep.failure.empty()) {
        rep.failure = "mismatch at orbit point " + std::to_string(idx) + " " +
                      str(table.points()[idx].point) + ": engine dim " +
                      std::to_string(pc.engine_dim) + " profile " +
                      profile_str(pc.engine_profile) + " vs oracle dim " +
                      std::to_string(pc.oracle_dim) + " profile " +
                      profile_str(pc.oracle_profile);
      }
    }
    rep.points.push_back(std::move(pc));
  }
  return rep;
}

VerificationReport verify_decomposition(const Realisation& real, const BSWord& w,
                                        const Point& a, const TitsCaps& caps) {
  auto table = orbit_table(real, a, caps);
  if (!table) throw std::domain_error("orbit cap exceeded");
  return verify_decomposition(real, w, a, *table, nullptr);
}

}  // namespace specbim
