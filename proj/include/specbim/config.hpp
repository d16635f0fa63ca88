#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "specbim/serialize.hpp"

namespace specbim {

/*
 * Declarative job description, read from a sectioned key-value file:
 *
 *   [coxeter]
 *   type = B2              # or: matrix = 1 4; 4 1   (inf for infinite bonds)
 *   field_d = 0            # surd base allowed in scalar literals
 *
 *   [point]
 *   pairings = 0, 1        # or: coords = 1/2, 3
 *
 *   [job]
 *   word = 2, 1            # 1-based generator indices
 *   verify = true
 *
 *   [caps]                 # optional
 *   descent = 10000
 *   orbit = 100000
 *
 *   [output]               # optional
 *   table = true
 *   json = report.json
 *
 *   [sweep]                # optional
 *   enabled = false
 *   max_word_len = 4
 *
 * Lines starting with '#' or ';' are comments. All validation problems are
 * aggregated into a single ConfigError.
 */
struct JobConfig {
  std::string type;
  std::vector<std::vector<unsigned>> matrix;  // user Coxeter matrix, 0 = inf
  unsigned field_d = 0;

  std::vector<std::string> coords;    // scalar literals, exactly one of
  std::vector<std::string> pairings;  // these two is given

  std::vector<int> word;  // 1-based as written
  bool verify = false;

  TitsCaps caps;

  bool table = true;
  std::string json_path;

  bool sweep = false;
  int max_word_len = 4;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  static std::string join(const std::vector<std::string>& errors);
  std::vector<std::string> errors_;
};

JobConfig parse_config_text(const std::string& text);
JobConfig parse_config_file(const std::string& path);

/// Job block for machine output; job_from_json inverts it exactly.
Json job_json(const JobConfig& cfg);
JobConfig job_from_json(const Json& j);

/// Semantically validated job: realisation built, point and word resolved.
/// All problems are aggregated into one ConfigError.
struct PreparedJob {
  Realisation real;
  Point base;
  Word word;  // 0-based
};

PreparedJob prepare_job(const JobConfig& cfg);

}  // namespace specbim
