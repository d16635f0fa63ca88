#include "specbim/config.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace specbim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

// comma or whitespace separated items
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool parse_bool(const std::string& v, std::vector<std::string>& errors,
                const std::string& key) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  errors.push_back(key + ": expected a boolean, got '" + v + "'");
  return false;
}

std::optional<long> parse_int(const std::string& v) {
  if (v.empty()) return std::nullopt;
  std::size_t i = v[0] == '-' || v[0] == '+' ? 1 : 0;
  if (i == v.size()) return std::nullopt;
  for (; i < v.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(v[i]))) return std::nullopt;
  }
  try {
    return std::stol(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

long require_int(const std::string& v, std::vector<std::string>& errors,
                 const std::string& key, long fallback) {
  auto n = parse_int(v);
  if (!n) {
    errors.push_back(key + ": expected an integer, got '" + v + "'");
    return fallback;
  }
  return *n;
}

std::vector<std::vector<unsigned>> parse_matrix(const std::string& v,
                                                std::vector<std::string>& errors) {
  std::vector<std::vector<unsigned>> m;
  for (const auto& row_text : split(v, ';')) {
    std::vector<unsigned> row;
    for (const auto& item : split_list(row_text)) {
      if (item == "inf") {
        row.push_back(CoxeterMatrix::kInfiniteBond);
        continue;
      }
      auto n = parse_int(item);
      if (!n || *n < 0) {
        errors.push_back("coxeter.matrix: bad entry '" + item + "'");
        row.push_back(2);
        continue;
      }
      row.push_back(static_cast<unsigned>(*n));
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error(join(errors)), errors_(std::move(errors)) {}

std::string ConfigError::join(const std::vector<std::string>& errors) {
  std::string out = "configuration invalid (" + std::to_string(errors.size()) +
                    (errors.size() == 1 ? " problem)" : " problems)");
  for (const auto& e : errors) out += "\n  - " + e;
  return out;
}

JobConfig parse_config_text(const std::string& text) {
  JobConfig cfg;
  std::vector<std::string> errors;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        errors.push_back("line " + std::to_string(lineno) + ": malformed section header");
        continue;
      }
      section = trim(t.substr(1, t.size() - 2));
      if (section != "coxeter" && section != "point" && section != "job" &&
          section != "caps" && section != "output" && section != "sweep") {
        errors.push_back("line " + std::to_string(lineno) + ": unknown section [" +
                         section + "]");
      }
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    std::string qkey = section + "." + key;

    if (qkey == "coxeter.type") {
      cfg.type = value;
    } else if (qkey == "coxeter.matrix") {
      cfg.matrix = parse_matrix(value, errors);
    } else if (qkey == "coxeter.field_d") {
      long d = require_int(value, errors, qkey, 0);
      if (d < 0) {
        errors.push_back(qkey + ": must be nonnegative");
      } else {
        cfg.field_d = static_cast<unsigned>(d);
      }
    } else if (qkey == "point.coords") {
      cfg.coords = split(value, ',');
    } else if (qkey == "point.pairings") {
      cfg.pairings = split(value, ',');
    } else if (qkey == "job.word") {
      for (const auto& item : split_list(value)) {
        auto n = parse_int(item);
        if (!n) {
          errors.push_back("job.word: bad entry '" + item + "'");
          continue;
        }
        cfg.word.push_back(static_cast<int>(*n));
      }
    } else if (qkey == "job.verify") {
      cfg.verify = parse_bool(value, errors, qkey);
    } else if (qkey == "caps.descent") {
      cfg.caps.descent = static_cast<int>(require_int(value, errors, qkey, cfg.caps.descent));
    } else if (qkey == "caps.orbit") {
      cfg.caps.orbit = static_cast<int>(require_int(value, errors, qkey, cfg.caps.orbit));
    } else if (qkey == "output.table") {
      cfg.table = parse_bool(value, errors, qkey);
    } else if (qkey == "output.json") {
      cfg.json_path = value;
    } else if (qkey == "sweep.enabled") {
      cfg.sweep = parse_bool(value, errors, qkey);
    } else if (qkey == "sweep.max_word_len") {
      cfg.max_word_len = static_cast<int>(require_int(value, errors, qkey, cfg.max_word_len));
    } else {
      errors.push_back("line " + std::to_string(lineno) + ": unknown key '" + qkey + "'");
    }
  }
  if (!errors.empty()) throw ConfigError(std::move(errors));
  return cfg;
}

JobConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file '" + path + "'"});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

Json job_json(const JobConfig& cfg) {
  Json j;
  Json cox;
  if (!cfg.type.empty()) cox["type"] = cfg.type;
  if (!cfg.matrix.empty()) cox["matrix"] = cfg.matrix;  // 0 encodes inf
  cox["field_d"] = cfg.field_d;
  j["coxeter"] = std::move(cox);
  Json point;
  if (!cfg.coords.empty()) point["coords"] = cfg.coords;
  if (!cfg.pairings.empty()) point["pairings"] = cfg.pairings;
  j["point"] = std::move(point);
  Json job;
  job["word"] = cfg.word;
  job["verify"] = cfg.verify;
  j["job"] = std::move(job);
  Json caps;
  caps["descent"] = cfg.caps.descent;
  caps["orbit"] = cfg.caps.orbit;
  j["caps"] = std::move(caps);
  // output targets are deliberately not part of the job: the job block
  // captures the mathematical input only, so round-trips reproduce the
  // same report regardless of where it is written
  Json sweep;
  sweep["enabled"] = cfg.sweep;
  sweep["max_word_len"] = cfg.max_word_len;
  j["sweep"] = std::move(sweep);
  return j;
}

JobConfig job_from_json(const Json& j) {
  JobConfig cfg;
  if (j.contains("coxeter")) {
    const auto& cox = j["coxeter"];
    if (cox.contains("type")) cfg.type = cox["type"].get<std::string>();
    if (cox.contains("matrix")) {
      cfg.matrix = cox["matrix"].get<std::vector<std::vector<unsigned>>>();
    }
    if (cox.contains("field_d")) cfg.field_d = cox["field_d"].get<unsigned>();
  }
  if (j.contains("point")) {
    const auto& point = j["point"];
    if (point.contains("coords")) {
      cfg.coords = point["coords"].get<std::vector<std::string>>();
    }
    if (point.contains("pairings")) {
      cfg.pairings = point["pairings"].get<std::vector<std::string>>();
    }
  }
  if (j.contains("job")) {
    const auto& job = j["job"];
    if (job.contains("word")) cfg.word = job["word"].get<std::vector<int>>();
    if (job.contains("verify")) cfg.verify = job["verify"].get<bool>();
  }
  if (j.contains("caps")) {
    const auto& caps = j["caps"];
    if (caps.contains("descent")) cfg.caps.descent = caps["descent"].get<int>();
    if (caps.contains("orbit")) cfg.caps.orbit = caps["orbit"].get<int>();
  }
  if (j.contains("sweep")) {
    const auto& sweep = j["sweep"];
    if (sweep.contains("enabled")) cfg.sweep = sweep["enabled"].get<bool>();
    if (sweep.contains("max_word_len")) {
      cfg.max_word_len = sweep["max_word_len"].get<int>();
    }
  }
  return cfg;
}

PreparedJob prepare_job(const JobConfig& cfg) {
  std::vector<std::string> errors;

  std::optional<Realisation> real;
  if (!cfg.type.empty() && !cfg.matrix.empty()) {
    errors.push_back("coxeter: give either type or matrix, not both");
  } else if (cfg.type.empty() && cfg.matrix.empty()) {
    errors.push_back("coxeter: one of type or matrix is required");
  } else {
    try {
      if (!cfg.type.empty()) {
        real = Realisation::named(cfg.type);
      } else {
        CoxeterMatrix cox;
        cox.rank = static_cast<int>(cfg.matrix.size());
        cox.m = cfg.matrix;
        real = Realisation::from_coxeter_matrix(cox);
      }
    } catch (const std::invalid_argument& e) {
      errors.push_back(std::string("coxeter: ") + e.what());
    }
  }
  if (!real) throw ConfigError(std::move(errors));

  if (cfg.field_d != 0 && real->field_d() != 0 && cfg.field_d != real->field_d()) {
    errors.push_back("field_d " + std::to_string(cfg.field_d) +
                     " clashes with the realisation's sqrt(" +
                     std::to_string(real->field_d()) + ")");
  }
  unsigned allowed_d = cfg.field_d != 0 ? cfg.field_d : real->field_d();

  auto parse_scalars = [&](const std::vector<std::string>& lits,
                           const std::string& what) {
    Vec out;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      try {
        Scalar s = Scalar::parse(lits[i]);
        if (s.surd_base() != 0 && s.surd_base() != allowed_d) {
          errors.push_back(what + "[" + std::to_string(i + 1) + "]: sqrt(" +
                           std::to_string(s.surd_base()) +
                           ") is outside the declared field");
        }
        out.push_back(std::move(s));
      } catch (const std::invalid_argument& e) {
        errors.push_back(what + "[" + std::to_string(i + 1) + "]: " + e.what());
        out.push_back(Scalar(0));
      }
    }
    return out;
  };

  Point base{Vec(real->dim())};
  if (!cfg.coords.empty() && !cfg.pairings.empty()) {
    errors.push_back("point: give either coords or pairings, not both");
  } else if (cfg.coords.empty() && cfg.pairings.empty()) {
    // a sweep samples its own dominant points, so the point is optional there
    if (!cfg.sweep) errors.push_back("point: one of coords or pairings is required");
  } else if (!cfg.coords.empty()) {
    Vec coords = parse_scalars(cfg.coords, "point.coords");
    if (static_cast<int>(coords.size()) != real->dim()) {
      errors.push_back("point.coords: expected " + std::to_string(real->dim()) +
                       " entries, got " + std::to_string(coords.size()));
    } else {
      base.coords = std::move(coords);
    }
  } else {
    Vec pairings = parse_scalars(cfg.pairings, "point.pairings");
    if (static_cast<int>(pairings.size()) != real->rank()) {
      errors.push_back("point.pairings: expected " + std::to_string(real->rank()) +
                       " entries, got " + std::to_string(pairings.size()));
    } else {
      try {
        base = point_from_pairings(*real, pairings);
      } catch (const std::exception& e) {
        errors.push_back(std::string("point.pairings: ") + e.what());
      }
    }
  }

  Word word;
  for (std::size_t i = 0; i < cfg.word.size(); ++i) {
    int s = cfg.word[i];
    if (s < 1 || s > real->rank()) {
      errors.push_back("job.word[" + std::to_string(i + 1) + "]: generator index " +
                       std::to_string(s) + " out of range 1.." +
                       std::to_string(real->rank()));
    } else {
      word.push_back(s - 1);
    }
  }

  if (cfg.caps.descent <= 0) errors.push_back("caps.descent: must be positive");
  if (cfg.caps.orbit <= 0) errors.push_back("caps.orbit: must be positive");
  if (cfg.sweep && cfg.max_word_len < 0) {
    errors.push_back("sweep.max_word_len: must be nonnegative");
  }

  if (!errors.empty()) throw ConfigError(std::move(errors));
  return PreparedJob{std::move(*real), std::move(base), std::move(word)};
}

}  // namespace specbim
