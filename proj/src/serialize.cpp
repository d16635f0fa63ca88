#include "specbim/serialize.hpp"

namespace specbim {

Json json_of(const Scalar& s) { return s.str(); }

Json json_of(const Vec& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(json_of(e));
  return out;
}

Json json_of(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_of(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json json_of(const Word& w) {
  Json out = Json::array();
  for (int s : w) out.push_back(s + 1);
  return out;
}

Json json_of(const CoxeterMatrix& c) {
  Json out = Json::array();
  for (int i = 0; i < c.rank; ++i) {
    Json row = Json::array();
    for (int j = 0; j < c.rank; ++j) {
      if (c.m[i][j] == CoxeterMatrix::kInfiniteBond) {
        row.push_back("inf");
      } else {
        row.push_back(c.m[i][j]);
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json json_of(const GroupElement& g) {
  Json out;
  out["word"] = json_of(g.word);
  out["matrix"] = json_of(g.matrix);
  return out;
}

Json json_of(const Reflection& r) {
  Json out;
  out["root"] = json_of(r.root);
  out["word"] = json_of(r.element.word);
  out["length"] = r.length;
  return out;
}

Json json_of(const Point& p) { return json_of(p.coords); }

Json realisation_json(const Realisation& real) {
  Json out;
  out["name"] = real.name();
  out["rank"] = real.rank();
  out["dim"] = real.dim();
  out["field_d"] = real.field_d();
  out["coxeter_matrix"] = json_of(real.coxeter_matrix());
  out["pairing_matrix"] = json_of(real.pairing_matrix());
  return out;
}

Json json_of(const StabiliserSystem& st) {
  Json out;
  out["base_point"] = json_of(st.base_point);
  out["domain_point"] = json_of(st.domain_point);
  out["conjugator"] = json_of(st.conjugator.word);
  Json parabolic = Json::array();
  for (int s : st.parabolic_set) parabolic.push_back(s + 1);
  out["parabolic_set"] = std::move(parabolic);
  Json gens = Json::array();
  for (const auto& r : st.stab_generators) gens.push_back(json_of(r));
  out["stab_generators"] = std::move(gens);
  out["local_coxeter_matrix"] = json_of(st.local_coxeter_matrix);
  return out;
}

Json json_of(const OrbitTable& table) {
  Json out;
  out["size"] = table.size();
  out["stabiliser"] = json_of(table.stabiliser());
  Json points = Json::array();
  for (const auto& op : table.points()) {
    Json p;
    p["point"] = json_of(op.point);
    p["rep"] = json_of(op.rep.word);
    Json local = Json::array();
    for (const auto& r : op.local_simple) local.push_back(json_of(r));
    p["local_simple"] = std::move(local);
    points.push_back(std::move(p));
  }
  out["points"] = std::move(points);
  return out;
}

Json json_of(const Summand& s) {
  Json out;
  out["point"] = json_of(s.point);
  Json letters = Json::array();
  for (const auto& r : s.letters) letters.push_back(json_of(r));
  out["letters"] = std::move(letters);
  out["dim"] = s.dim();
  out["local_simple"] = s.in_local_simple_system;
  out["trace"] = trace_str(s.origin_trace);
  return out;
}

Json json_of(const Decomposition& dec) {
  Json out;
  out["word"] = json_of(dec.source_word);
  out["base_point"] = json_of(dec.base_point);
  out["total_dim"] = dec.total_dim();
  Json summands = Json::array();
  for (const auto& s : dec.summands) summands.push_back(json_of(s));
  out["summands"] = std::move(summands);
  return out;
}

Json json_of(const FlagPrediction& flag) {
  Json out = Json::array();
  for (const auto& [p, c] : flag.counts) {
    Json e;
    e["point"] = json_of(p);
    e["count"] = c;
    out.push_back(std::move(e));
  }
  return out;
}

Json json_of(const LocalSimplicityReport& rep) {
  Json out;
  out["all_local_simple"] = rep.all_local_simple;
  out["flagged"] = rep.flagged;
  out["per_summand"] = rep.per_summand;
  return out;
}

Json json_of(const VerificationReport& rep, const OrbitTable& table) {
  Json out;
  out["pass"] = rep.pass;
  out["module_dim"] = rep.module_dim;
  if (!rep.failure.empty()) out["failure"] = rep.failure;
  Json points = Json::array();
  for (const auto& pc : rep.points) {
    Json p;
    p["orbit_index"] = pc.orbit_index;
    p["point"] = json_of(table.points()[pc.orbit_index].point);
    p["engine_dim"] = pc.engine_dim;
    p["oracle_dim"] = pc.oracle_dim;
    p["engine_profile"] = pc.engine_profile;
    p["oracle_profile"] = pc.oracle_profile;
    p["pass"] = pc.pass;
    points.push_back(std::move(p));
  }
  out["points"] = std::move(points);
  return out;
}

}  // namespace specbim
