#include "specbim/tits.hpp"

#include <stdexcept>
#include <unordered_set>

namespace specbim {

std::string str(const Point& p) { return str(p.coords); }

Vec wall_pairings(const Realisation& real, const Point& a) {
  Vec out(real.rank());
  for (int s = 0; s < real.rank(); ++s) out[s] = real.pairing(a.coords, s);
  return out;
}

Point point_from_pairings(const Realisation& real, const Vec& pairings) {
  if (static_cast<int>(pairings.size()) != real.rank()) {
    throw std::invalid_argument("need one pairing per generator");
  }
  if (real.dim() != real.rank()) {
    throw std::invalid_argument(
        "pairings only determine a point when dim == rank; give coordinates");
  }
  std::vector<Vec> rows;
  for (int s = 0; s < real.rank(); ++s) rows.push_back(real.simple_coroot(s));
  Mat a = Mat::from_rows(rows);
  Mat x = solve_exact(a, Mat::from_cols({pairings}));  // throws if singular
  return Point{x.col(0)};
}

std::optional<FundamentalDomainResult> to_fundamental_domain(const Realisation& real,
                                                             const Point& a, int cap) {
  Point p = a;
  Word w;
  for (int step = 0; step <= cap; ++step) {
    int descent = -1;
    for (int s = 0; s < real.rank(); ++s) {
      if (real.pairing(p.coords, s).sign() < 0) {
        descent = s;
        break;
      }
    }
    if (descent < 0) {
      // p is dominant; a = s_{i1} ... s_{ik} (p) for the recorded steps
      return FundamentalDomainResult{p, real.element_from_word(w)};
    }
    p.coords = real.generator(descent).apply(p.coords);
    w.push_back(descent);
  }
  return std::nullopt;
}

std::optional<bool> is_tits_ideal(const Realisation& real, const Point& a, int cap) {
  if (to_fundamental_domain(real, a, cap)) return true;
  return std::nullopt;  // cap hit: not in cone, or cone membership undetermined
}

StabiliserSystem stabiliser_system(const Realisation& real, const Point& a,
                                   const TitsCaps& caps) {
  auto fd = to_fundamental_domain(real, a, caps.descent);
  if (!fd) {
    throw std::domain_error(
        "point not certified in the Tits cone (descent cap exceeded)");
  }
  StabiliserSystem out;
  out.base_point = a;
  out.domain_point = fd->rep;

  for (int s = 0; s < real.rank(); ++s) {
    if (real.pairing(fd->rep.coords, s).is_zero()) out.parabolic_set.push_back(s);
  }

  // minimal representative of w W_I: strip descents on the right
  GroupElement w = fd->w;
  bool descended = true;
  while (descended) {
    descended = false;
    for (int s : out.parabolic_set) {
      if (real.root_sign(w.matrix.apply(real.simple_root(s))) < 0) {
        w.matrix = w.matrix * real.generator(s);
        w.word.push_back(s);
        descended = true;
        break;
      }
    }
  }
  out.conjugator = w;

  for (int s : out.parabolic_set) {
    Reflection r = real.reflection_from(w, s);
    if (r.element.matrix.apply(a.coords) != a.coords) {
      throw std::logic_error("stabiliser generator does not fix the point");
    }
    out.stab_generators.push_back(std::move(r));
  }

  const int n = static_cast<int>(out.stab_generators.size());
  out.local_coxeter_matrix.rank = n;
  out.local_coxeter_matrix.m.assign(n, std::vector<unsigned>(n, 1));
  const int order_cap = 1000;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto ord = order_of(out.stab_generators[i].element.matrix *
                              out.stab_generators[j].element.matrix,
                          order_cap);
      unsigned m = ord ? static_cast<unsigned>(*ord) : CoxeterMatrix::kInfiniteBond;
      out.local_coxeter_matrix.m[i][j] = m;
      out.local_coxeter_matrix.m[j][i] = m;
    }
  }
  if (n > 0) out.local_coxeter_matrix.validate();
  return out;
}

int OrbitTable::index_of(const Point& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::optional<OrbitTable> orbit_table(const Realisation& real, const Point& a,
                                      const TitsCaps& caps) {
  OrbitTable table;
  table.stab_ = stabiliser_system(real, a, caps);

  OrbitPoint base;
  base.point = a;
  base.rep = real.identity_element();
  base.local_simple = table.stab_.stab_generators;
  table.index_.emplace(base.point, 0);
  table.points_.push_back(std::move(base));

  // breadth-first; within a level, generator-major order makes the first
  // word reaching a new point the lexicographically smallest shortest one
  std::vector<int> level{0};
  while (!level.empty()) {
    std::vector<int> next;
    for (int s = 0; s < real.rank(); ++s) {
      for (int idx : level) {
        Point q{real.generator(s).apply(table.points_[idx].point.coords)};
        if (table.index_.count(q)) continue;
        if (static_cast<int>(table.points_.size()) >= caps.orbit) return std::nullopt;
        OrbitPoint op;
        op.point = q;
        op.rep.word.reserve(table.points_[idx].rep.word.size() + 1);
        op.rep.word.push_back(s);
        op.rep.word.insert(op.rep.word.end(), table.points_[idx].rep.word.begin(),
                           table.points_[idx].rep.word.end());
        op.rep.matrix = real.generator(s) * table.points_[idx].rep.matrix;
        GroupElement inv = real.inverse(op.rep);
        for (const auto& r : table.stab_.stab_generators) {
          Reflection c;
          c.root = real.canonical_root(op.rep.matrix.apply(r.root));
          c.element.matrix = op.rep.matrix * r.element.matrix * inv.matrix;
          c.element.word = op.rep.word;
          c.element.word.insert(c.element.word.end(), r.element.word.begin(),
                                r.element.word.end());
          c.element.word.insert(c.element.word.end(), inv.word.begin(), inv.word.end());
          if (real.roots_closed()) {
            auto len = length(real, c.element);
            c.length = len ? *len : -1;
          }
          if (c.element.matrix.apply(q.coords) != q.coords) {
            throw std::logic_error("conjugated simple system does not fix its point");
          }
          op.local_simple.push_back(std::move(c));
        }
        table.index_.emplace(op.point, static_cast<int>(table.points_.size()));
        next.push_back(static_cast<int>(table.points_.size()));
        table.points_.push_back(std::move(op));
      }
    }
    level = std::move(next);
  }
  return table;
}

MinimalityReport check_stab_generator_minimality(const Realisation& real,
                                                 const StabiliserSystem& stab,
                                                 int group_word_cap) {
  GroupEnumeration group = enumerate_group(real, group_word_cap);
  if (!group.complete) {
    throw std::domain_error("group enumeration incomplete; cannot check minimality");
  }
  if (!real.roots_closed()) {
    throw std::domain_error("root system not enumerated; cannot check minimality");
  }

  // reflections lying in stab(a)
  std::vector<const Reflection*> stab_reflections;
  for (const auto& r : real.positive_system()) {
    if (r.element.matrix.apply(stab.base_point.coords) == stab.base_point.coords) {
      stab_reflections.push_back(&r);
    }
  }

  MinimalityReport report;
  const int n = static_cast<int>(stab.stab_generators.size());
  for (int i = 0; i < n; ++i) {
    // subgroup generated by the other chosen generators
    std::unordered_set<Mat, MatHash> sub;
    sub.insert(Mat::identity(real.dim()));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Mat> frontier(sub.begin(), sub.end());
      for (const auto& g : frontier) {
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          Mat h = g * stab.stab_generators[j].element.matrix;
          if (sub.insert(std::move(h)).second) grew = true;
        }
      }
    }

    MinimalityItem item;
    item.parabolic_generator = stab.parabolic_set[i];
    item.chosen_length = stab.stab_generators[i].length;
    item.best_alternative = -1;
    for (const auto* r : stab_reflections) {
      if (sub.count(r->element.matrix)) continue;
      if (item.best_alternative < 0 || r->length < item.best_alternative) {
        item.best_alternative = r->length;
      }
    }
    item.minimal = item.best_alternative < 0 || item.chosen_length <= item.best_alternative;
    if (!item.minimal) report.all_minimal = false;
    report.items.push_back(item);
  }
  return report;
}

}  // namespace specbim
