// specbim: exact decomposition of specialised Bott-Samelson bimodules.
//
// Reads a declarative job config (or a serialised job from a previous JSON
// report), runs the two-case recursion, cross-checks the standard-flag
// prediction, and optionally verifies the result against the brute-force
// module realisation. Exit codes: 0 success, 1 verification or consistency
// failure, 2 configuration error, 3 precondition failure (point not
// certified in the Tits cone, or a cap was exceeded).

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "specbim/config.hpp"
#include "specbim/serialize.hpp"
#include "specbim/sweep.hpp"

namespace {

using namespace specbim;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;

void print_table_row(const std::vector<std::string>& cells,
                     const std::vector<int>& widths) {
  std::cout << " ";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::cout << " " << std::left << std::setw(widths[i]) << cells[i];
  }
  std::cout << "\n";
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<int> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    widths[i] = static_cast<int>(header[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], static_cast<int>(row[i].size()));
    }
  }
  print_table_row(header, widths);
  std::string rule;
  for (std::size_t i = 0; i < header.size(); ++i) {
    rule += std::string(widths[i] + 1, '-');
  }
  std::cout << " " << rule << "\n";
  for (const auto& row : rows) print_table_row(row, widths);
}

std::string letters_str(const std::vector<Reflection>& letters) {
  if (letters.empty()) return "()";
  std::string out;
  for (const auto& r : letters) {
    if (!out.empty()) out += " ";
    out += word_str(r.element.word);
  }
  return out;
}

std::string walls_str(const std::vector<int>& walls) {
  std::string out = "{";
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(walls[i] + 1);
  }
  return out + "}";
}

bool write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << j.dump(2) << "\n";
  return true;
}

int run_single(const JobConfig& cfg) {
  PreparedJob job = prepare_job(cfg);  // ConfigError handled by caller
  const Realisation& real = job.real;

  std::optional<OrbitTable> table;
  try {
    table = orbit_table(real, job.base, cfg.caps);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  if (!table) {
    std::cerr << "error: orbit cap (" << cfg.caps.orbit << ") exceeded\n";
    return kExitPrecondition;
  }

  Decomposition dec = specialise(real, job.word, job.base, &*table);
  FlagPrediction flag = standard_flag_prediction(real, job.word, job.base);
  LocalSimplicityReport ls = check_local_simplicity(dec, *table);

  // flag cross-check: engine dims per point vs subword evaluation counts
  bool flag_ok = true;
  {
    std::vector<long long> engine(table->size(), 0);
    for (const auto& s : dec.summands) {
      engine[table->index_of(s.point)] += static_cast<long long>(s.dim());
    }
    std::vector<long long> predicted(table->size(), 0);
    for (const auto& [p, c] : flag.counts) predicted[table->index_of(p)] += c;
    flag_ok = engine == predicted;
  }

  std::optional<VerificationReport> verification;
  if (cfg.verify) {
    verification = verify_decomposition(real, job.word, job.base, *table, nullptr);
  }

  if (cfg.table) {
    const auto& stab = table->stabiliser();
    std::cout << "realisation: " << real.name() << " (rank " << real.rank() << ", dim "
              << real.dim() << ", field d=" << real.field_d() << ")\n";
    std::cout << "base point: " << str(job.base)
              << "  pairings: " << str(wall_pairings(real, job.base)) << "\n";
    std::cout << "domain point: " << str(stab.domain_point) << "  conjugator: "
              << word_str(stab.conjugator.word) << "\n";
    std::cout << "stabiliser: |S_a| = " << stab.stab_generators.size()
              << ", parabolic set {";
    for (std::size_t i = 0; i < stab.parabolic_set.size(); ++i) {
      std::cout << (i ? "," : "") << stab.parabolic_set[i] + 1;
    }
    std::cout << "}\n\n";

    std::cout << "orbit (" << table->size() << " points):\n";
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < table->size(); ++i) {
      const auto& op = table->points()[i];
      rows.push_back({std::to_string(i), str(op.point), word_str(op.rep.word)});
    }
    print_table({"#", "point", "rep"}, rows);
    std::cout << "\n";

    std::cout << "decomposition of B" << word_str(job.word) << " (x) K_a (total dim "
              << dec.total_dim() << "):\n";
    rows.clear();
    for (std::size_t i = 0; i < dec.summands.size(); ++i) {
      const auto& s = dec.summands[i];
      rows.push_back({std::to_string(i), str(s.point), letters_str(s.letters),
                      std::to_string(s.dim()), s.in_local_simple_system ? "yes" : "NO",
                      trace_str(s.origin_trace)});
    }
    print_table({"#", "point", "letters", "dim", "local-simple", "trace"}, rows);
    std::cout << "\n";

    std::cout << "flag prediction: " << (flag_ok ? "consistent" : "MISMATCH") << "\n";
    std::cout << "local simplicity: "
              << (ls.all_local_simple
                      ? "all summands in canonical local simple systems"
                      : std::to_string(ls.flagged) + " summand(s) flagged")
              << "\n";
    if (verification) {
      std::cout << "verification: " << (verification->pass ? "PASS" : "FAIL") << "\n";
      if (!verification->pass) std::cout << "  " << verification->failure << "\n";
      rows.clear();
      for (const auto& pc : verification->points) {
        auto profile = [](const std::vector<int>& p) {
          std::string out = "[";
          for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(p[i]);
          }
          return out + "]";
        };
        rows.push_back({std::to_string(pc.orbit_index),
                        str(table->points()[pc.orbit_index].point),
                        std::to_string(pc.engine_dim), std::to_string(pc.oracle_dim),
                        profile(pc.engine_profile), profile(pc.oracle_profile),
                        pc.pass ? "ok" : "FAIL"});
      }
      print_table({"#", "point", "engine dim", "oracle dim", "engine profile",
                   "oracle profile", "status"},
                  rows);
    }
  }

  if (!cfg.json_path.empty()) {
    Json report;
    report["job"] = job_json(cfg);
    report["realisation"] = realisation_json(real);
    report["orbit"] = json_of(*table);
    report["decomposition"] = json_of(dec);
    report["flag_prediction"] = json_of(flag);
    report["flag_consistent"] = flag_ok;
    report["local_simplicity"] = json_of(ls);
    if (verification) report["verification"] = json_of(*verification, *table);
    if (!write_json_file(cfg.json_path, report)) return kExitConfig;
  }

  if (!flag_ok) return kExitMismatch;
  if (verification && !verification->pass) return kExitMismatch;
  return kExitOk;
}

int run_sweep_mode(const JobConfig& cfg) {
  PreparedJob job = prepare_job(cfg);
  SweepOptions options;
  options.max_word_len = cfg.max_word_len;
  options.verify = cfg.verify;
  options.caps = cfg.caps;
  options.threads = default_thread_count();

  SweepReport report = run_sweep(job.real, options);

  if (cfg.table) {
    std::cout << "sweep: " << report.type_name << ", words up to length "
              << cfg.max_word_len << (cfg.verify ? ", with oracle verification" : "")
              << "\n";
    std::cout << "jobs: " << report.total << "  failures: " << report.failures
              << "  local-simplicity flags: " << report.local_simplicity_flags << "\n";
    if (report.failures > 0) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& rec : report.jobs) {
        if (rec.flag_ok && rec.verify_ok && rec.failure.empty()) continue;
        rows.push_back({walls_str(rec.walls), word_str(rec.word), rec.failure});
      }
      print_table({"walls", "word", "failure"}, rows);
    }
  }

  if (!cfg.json_path.empty()) {
    Json report_json;
    report_json["job"] = job_json(cfg);
    Json sweep;
    sweep["type"] = report.type_name;
    sweep["total"] = report.total;
    sweep["failures"] = report.failures;
    sweep["local_simplicity_flags"] = report.local_simplicity_flags;
    sweep["all_ok"] = report.all_ok;
    Json jobs = Json::array();
    for (const auto& rec : report.jobs) {
      Json r;
      Json walls = Json::array();
      for (int w : rec.walls) walls.push_back(w + 1);
      r["walls"] = std::move(walls);
      r["word"] = json_of(rec.word);
      r["flag_ok"] = rec.flag_ok;
      r["verified"] = rec.verified;
      r["verify_ok"] = rec.verify_ok;
      r["local_simple"] = rec.local_simple;
      if (!rec.failure.empty()) r["failure"] = rec.failure;
      jobs.push_back(std::move(r));
    }
    sweep["jobs"] = std::move(jobs);
    report_json["sweep"] = std::move(sweep);
    if (!write_json_file(cfg.json_path, report_json)) return kExitConfig;
  }

  return report.all_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decomposition of specialised Bott-Samelson bimodules"};

  std::string config_path, job_json_path;
  app.add_option("config", config_path, "job config file");
  app.add_option("--job-json", job_json_path,
                 "re-run the serialised job block of a JSON report");

  std::string opt_type, opt_json, opt_coords, opt_pairings, opt_word;
  int opt_max_word_len = -1, opt_cap_orbit = -1, opt_cap_descent = -1;
  long opt_field_d = -1;
  bool opt_verify = false, opt_sweep = false, opt_no_table = false;
  app.add_option("--type", opt_type, "built-in realisation type");
  app.add_option("--field-d", opt_field_d, "surd base for scalar literals");
  app.add_option("--coords", opt_coords, "base point coordinates (comma separated)");
  app.add_option("--pairings", opt_pairings, "base point coroot pairings");
  app.add_option("--word", opt_word, "word, 1-based generator indices");
  app.add_flag("--verify", opt_verify, "verify against the module oracle");
  app.add_option("--json", opt_json, "write a JSON report to this path");
  app.add_flag("--sweep", opt_sweep, "sweep wall subsets and words");
  app.add_option("--max-word-len", opt_max_word_len, "sweep word length bound");
  app.add_option("--cap-orbit", opt_cap_orbit, "orbit size cap");
  app.add_option("--cap-descent", opt_cap_descent, "descent step cap");
  app.add_flag("--no-table", opt_no_table, "suppress human-readable tables");

  CLI11_PARSE(app, argc, argv);

  try {
    JobConfig cfg;
    if (!job_json_path.empty()) {
      std::ifstream in(job_json_path);
      if (!in) {
        std::cerr << "error: cannot open '" << job_json_path << "'\n";
        return kExitConfig;
      }
      Json j = Json::parse(in, nullptr, true, true);
      if (!j.contains("job")) {
        std::cerr << "error: '" << job_json_path << "' has no job block\n";
        return kExitConfig;
      }
      cfg = job_from_json(j["job"]);
    } else if (!config_path.empty()) {
      cfg = parse_config_file(config_path);
    }

    auto parse_list = [](const std::string& text) {
      std::vector<std::string> out;
      std::string cur;
      for (char c : text) {
        if (c == ',') {
          out.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      out.push_back(cur);
      return out;
    };

    if (!opt_type.empty()) {
      cfg.type = opt_type;
      cfg.matrix.clear();
    }
    if (opt_field_d >= 0) cfg.field_d = static_cast<unsigned>(opt_field_d);
    if (!opt_coords.empty()) {
      cfg.coords = parse_list(opt_coords);
      cfg.pairings.clear();
    }
    if (!opt_pairings.empty()) {
      cfg.pairings = parse_list(opt_pairings);
      cfg.coords.clear();
    }
    if (!opt_word.empty()) {
      cfg.word.clear();
      for (const auto& item : parse_list(opt_word)) {
        try {
          cfg.word.push_back(std::stoi(item));
        } catch (const std::exception&) {
          std::cerr << "error: bad word entry '" << item << "'\n";
          return kExitConfig;
        }
      }
    }
    if (opt_verify) cfg.verify = true;
    if (!opt_json.empty()) cfg.json_path = opt_json;
    if (opt_sweep) cfg.sweep = true;
    if (opt_max_word_len >= 0) cfg.max_word_len = opt_max_word_len;
    if (opt_cap_orbit > 0) cfg.caps.orbit = opt_cap_orbit;
    if (opt_cap_descent > 0) cfg.caps.descent = opt_cap_descent;
    if (opt_no_table) cfg.table = false;

    return cfg.sweep ? run_sweep_mode(cfg) : run_single(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
