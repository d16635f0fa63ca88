#pragma once

// Brute-force reference computations for the tests. These deliberately avoid
// the library's stabiliser/orbit/length code paths: stabilisers come from a
// full group enumeration, subgroups from closure under multiplication, and
// lengths from breadth-first search over words.

#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "specbim/tits.hpp"

namespace specbim::brute {

inline Point apply(const GroupElement& g, const Point& a) {
  return Point{g.matrix.apply(a.coords)};
}

inline std::vector<GroupElement> full_group(const Realisation& real, int cap = 64) {
  GroupEnumeration en = enumerate_group(real, cap);
  if (!en.complete) throw std::runtime_error("group enumeration incomplete");
  return std::move(en.elements);
}

/// {g : g a = a} over the full group.
inline std::vector<GroupElement> stabiliser(const Realisation& real, const Point& a,
                                            int cap = 64) {
  std::vector<GroupElement> out;
  for (const auto& g : full_group(real, cap)) {
    if (apply(g, a) == a) out.push_back(g);
  }
  return out;
}

/// Closure of gens under left multiplication (assumes a finite subgroup).
inline std::vector<GroupElement> subgroup_closure(const Realisation& real,
                                                  const std::vector<GroupElement>& gens,
                                                  std::size_t cap = 100000) {
  std::vector<GroupElement> elems{real.identity_element()};
  std::unordered_set<Mat, MatHash> seen{elems[0].matrix};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      GroupElement next = real.multiply(g, elems[i]);
      if (seen.insert(next.matrix).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cap) throw std::runtime_error("subgroup closure cap");
      }
    }
  }
  return elems;
}

inline bool same_elements(const std::vector<GroupElement>& x,
                          const std::vector<GroupElement>& y) {
  if (x.size() != y.size()) return false;
  std::unordered_set<Mat, MatHash> sx;
  for (const auto& g : x) sx.insert(g.matrix);
  for (const auto& g : y) {
    if (!sx.count(g.matrix)) return false;
  }
  return true;
}

/// W-orbit of a point, as a set, by applying every enumerated element.
inline std::vector<Point> orbit(const Realisation& real, const Point& a, int cap = 64) {
  std::vector<Point> out;
  std::unordered_set<Point, PointHash> seen;
  for (const auto& g : full_group(real, cap)) {
    Point p = apply(g, a);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

/// Shortest word length of g by breadth-first search, independent of the
/// library's inversion-count length.
inline std::optional<int> shortest_length(const Realisation& real, const GroupElement& g,
                                          int max_len = 64) {
  GroupElement id = real.identity_element();
  if (g == id) return 0;
  std::vector<GroupElement> frontier{id};
  std::unordered_set<Mat, MatHash> seen{id.matrix};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<GroupElement> next;
    for (const auto& h : frontier) {
      for (int s = 0; s < real.rank(); ++s) {
        GroupElement hs = real.multiply(h, real.element_from_word(Word{s}));
        if (!seen.insert(hs.matrix).second) continue;
        if (hs == g) return len;
        next.push_back(std::move(hs));
      }
    }
    if (next.empty()) return std::nullopt;
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace specbim::brute
