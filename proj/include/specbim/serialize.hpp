#pragma once

#include <json.hpp>

#include "specbim/oracle.hpp"

namespace specbim {

// insertion-ordered JSON keeps every report byte-deterministic
using Json = nlohmann::ordered_json;

Json json_of(const Scalar& s);
Json json_of(const Vec& v);
Json json_of(const Mat& m);
Json json_of(const Word& w);  // 1-based externally
Json json_of(const CoxeterMatrix& c);
Json json_of(const GroupElement& g);
Json json_of(const Reflection& r);
Json json_of(const Point& p);

Json realisation_json(const Realisation& real);
Json json_of(const StabiliserSystem& st);
Json json_of(const OrbitTable& table);
Json json_of(const Summand& s);
Json json_of(const Decomposition& dec);
Json json_of(const FlagPrediction& flag);
Json json_of(const LocalSimplicityReport& rep);
Json json_of(const VerificationReport& rep, const OrbitTable& table);

}  // namespace specbim
