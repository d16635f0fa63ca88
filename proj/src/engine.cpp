#include "specbim/engine.hpp"

#include <stdexcept>
#include <unordered_map>

namespace specbim {

std::string trace_str(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const auto& step : trace) {
    if (!out.empty()) out += ",";
    out += "s" + std::to_string(step.generator + 1) + ":";
    switch (step.kind) {
      case RecursionCase::Prepend: out += "prepend"; break;
      case RecursionCase::Keep: out += "keep"; break;
      case RecursionCase::Conjugate: out += "conjugate"; break;
    }
  }
  return out;
}

std::size_t Decomposition::total_dim() const {
  std::size_t total = 0;
  for (const auto& s : summands) total += s.dim();
  return total;
}

std::vector<Reflection> conjugate_word(const Realisation& real, int s,
                                       const std::vector<Reflection>& v) {
  std::vector<Reflection> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(real.conjugate_reflection(s, r));
  return out;
}

namespace {

bool letter_in_simple_system(const Reflection& letter,
                             const std::vector<Reflection>& system) {
  for (const auto& r : system) {
    if (r.element.matrix == letter.element.matrix) return true;
  }
  return false;
}

}  // namespace

Decomposition specialise(const Realisation& real, const BSWord& w, const Point& a,
                         const OrbitTable* table) {
  if (static_cast<int>(a.coords.size()) != real.dim()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  Decomposition dec;
  dec.source_word = w;
  dec.base_point = a;

  std::vector<Summand> cur;
  cur.push_back(Summand{a, {}, false, {}});

  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    const int s = w[i];
    if (s < 0 || s >= real.rank()) {
      throw std::invalid_argument("generator index " + std::to_string(s + 1) +
                                  " out of range 1.." + std::to_string(real.rank()));
    }
    std::vector<Summand> next;
    next.reserve(2 * cur.size());
    for (auto& m : cur) {
      Point sp{real.generator(s).apply(m.point.coords)};
      if (sp == m.point) {
        // case 1: s is a reflection fixing p; prepend it to the letters
        Summand out;
        out.point = m.point;
        out.letters.reserve(m.letters.size() + 1);
        out.letters.push_back(real.simple_reflection(s));
        out.letters.insert(out.letters.end(), m.letters.begin(), m.letters.end());
        out.origin_trace = m.origin_trace;
        out.origin_trace.push_back({s, RecursionCase::Prepend});
        next.push_back(std::move(out));
      } else {
        // case 2: the summand splits into (p, v) and (sp, svs)
        Summand stay;
        stay.point = m.point;
        stay.letters = m.letters;
        stay.origin_trace = m.origin_trace;
        stay.origin_trace.push_back({s, RecursionCase::Keep});
        next.push_back(std::move(stay));

        Summand moved;
        moved.point = std::move(sp);
        moved.letters = conjugate_word(real, s, m.letters);
        moved.origin_trace = std::move(m.origin_trace);
        moved.origin_trace.push_back({s, RecursionCase::Conjugate});
        next.push_back(std::move(moved));
      }
    }
    cur = std::move(next);
  }
  dec.summands = std::move(cur);

  if (dec.total_dim() != (std::size_t{1} << w.size())) {
    throw std::logic_error("dimension conservation violated in specialise");
  }

  if (table) {
    for (auto& m : dec.summands) {
      int idx = table->index_of(m.point);
      if (idx < 0) throw std::logic_error("summand point escaped the orbit");
      m.in_local_simple_system = true;
      for (const auto& letter : m.letters) {
        if (!letter_in_simple_system(letter, table->points()[idx].local_simple)) {
          m.in_local_simple_system = false;
          break;
        }
      }
    }
  }
  return dec;
}

std::vector<Summand> res_point(const Decomposition& dec, const OrbitTable& table,
                               const Point& p) {
  if (table.index_of(p) < 0) {
    throw std::invalid_argument("point is not in the orbit of the base point");
  }
  std::vector<Summand> out;
  for (const auto& m : dec.summands) {
    if (m.point == p) out.push_back(m);
  }
  return out;
}

long long FlagPrediction::count_for(const Point& p) const {
  for (const auto& [q, c] : counts) {
    if (q == p) return c;
  }
  return 0;
}

FlagPrediction standard_flag_prediction(const Realisation& real, const BSWord& w,
                                        const Point& a) {
  FlagPrediction out;
  std::unordered_map<Point, std::size_t, PointHash> index;

  auto add = [&](const Point& p, long long c) {
    auto it = index.find(p);
    if (it != index.end()) {
      out.counts[it->second].second += c;
      return;
    }
    index.emplace(p, out.counts.size());
    out.counts.emplace_back(p, c);
  };

  std::vector<std::pair<Point, long long>> cur{{a, 1}};
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    const int s = w[i];
    if (s < 0 || s >= real.rank()) {
      throw std::invalid_argument("generator index " + std::to_string(s + 1) +
                                  " out of range 1.." + std::to_string(real.rank()));
    }
    out.counts.clear();
    index.clear();
    for (const auto& [p, c] : cur) {
      add(p, c);
      add(Point{real.generator(s).apply(p.coords)}, c);
    }
    cur = out.counts;
  }
  out.counts = std::move(cur);
  return out;
}

LocalSimplicityReport check_local_simplicity(const Decomposition& dec,
                                             const OrbitTable& table) {
  LocalSimplicityReport report;
  for (const auto& m : dec.summands) {
    int idx = table.index_of(m.point);
    if (idx < 0) throw std::invalid_argument("summand point is not in the orbit");
    bool ok = true;
    for (const auto& letter : m.letters) {
      if (!letter_in_simple_system(letter, table.points()[idx].local_simple)) {
        ok = false;
        break;
      }
    }
    report.per_summand.push_back(ok);
    if (!ok) {
      report.all_local_simple = false;
      ++report.flagged;
    }
  }
  return report;
}

}  // namespace specbim
