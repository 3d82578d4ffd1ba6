// a2ck command line: drives the shared library through its C interface.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "a2ck.h"

namespace {

struct CommonOpts {
  std::string preset;
  std::string config_file;
  std::string datum_file;
  int radius = 12;
  std::string out_dir = "out";
  int workers = 0;
  bool no_cache = false;
  int h3_window = 2;
  int h3_shape_cap = 3;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset, "built-in group datum preset (e.g. paper-q2)");
  cmd->add_option("--config", o.config_file, "pipeline config JSON file");
  cmd->add_option("--datum", o.datum_file, "group datum JSON file");
  cmd->add_option("--radius", o.radius, "chamber ball gallery radius")->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--workers", o.workers, "worker threads (0 = auto)");
  cmd->add_flag("--no-cache", o.no_cache, "do not read or write the ball cache");
  cmd->add_option("--h3-window", o.h3_window, "offset window for the aperiodicity search");
  cmd->add_option("--h3-shape-cap", o.h3_shape_cap, "largest word shape tried per offset");
}

std::string escape_json(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string build_config(const CommonOpts& o) {
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) {
      std::cerr << "error: cannot open config file " << o.config_file << "\n";
      std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ostringstream ss;
  ss << "{\"datum\":{";
  if (!o.preset.empty())
    ss << "\"preset\":\"" << escape_json(o.preset) << "\"";
  else if (!o.datum_file.empty())
    ss << "\"file\":\"" << escape_json(o.datum_file) << "\"";
  else
    ss << "\"preset\":\"paper-q2\"";
  ss << "},\"radius\":" << o.radius << ",\"out_dir\":\"" << escape_json(o.out_dir) << "\""
     << ",\"workers\":" << o.workers << ",\"cache\":" << (o.no_cache ? "false" : "true")
     << ",\"h3_window\":" << o.h3_window << ",\"h3_shape_cap\":" << o.h3_shape_cap << "}";
  return ss.str();
}

int run_stage(const CommonOpts& o, const std::string& stage, bool do_export, bool print_md) {
  a2ck_session* s = nullptr;
  if (a2ck_session_create(build_config(o).c_str(), &s) != A2CK_OK) {
    std::cerr << "error: " << a2ck_last_error() << "\n";
    return 2;
  }
  if (a2ck_session_run(s, stage.c_str()) != A2CK_OK) {
    std::cerr << "error: " << a2ck_last_error() << "\n";
    a2ck_session_destroy(s);
    return 2;
  }
  if (do_export && a2ck_session_export(s) != A2CK_OK) {
    std::cerr << "error: " << a2ck_last_error() << "\n";
    a2ck_session_destroy(s);
    return 2;
  }
  char* text = nullptr;
  if (a2ck_session_report(s, print_md ? "markdown" : "json", &text) == A2CK_OK) {
    std::cout << text;
    a2ck_string_free(text);
  }
  const int code = a2ck_session_exit_code(s);
  a2ck_session_destroy(s);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification pipeline for boundary algebras of triangle buildings"};
  app.require_subcommand(1);

  CommonOpts o;
  auto* build = app.add_subcommand("build", "group engine + chamber ball + link validation");
  auto* matrices = app.add_subcommand("matrices", "alphabets and transition matrices (+ export)");
  auto* verify = app.add_subcommand("verify", "shift conditions and counting crosschecks");
  auto* ktheory = app.add_subcommand("ktheory", "cokernels, K-groups and unit classes");
  auto* report = app.add_subcommand("report", "full pipeline; writes report.json / report.md");
  for (auto* c : {build, matrices, verify, ktheory, report}) add_common(c, o);

  auto* oracle = app.add_subcommand("oracle-snf", "standalone SNF vs determinant-divisor oracle");
  int oracle_count = 200;
  unsigned long long oracle_seed = 0x5eed;
  oracle->add_option("--count", oracle_count, "number of random matrices");
  oracle->add_option("--seed", oracle_seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);

  if (oracle->parsed()) {
    char* summary = nullptr;
    if (a2ck_snf_oracle(oracle_count, oracle_seed, &summary) != A2CK_OK) {
      std::cerr << "FAIL: " << a2ck_last_error() << "\n";
      return 1;
    }
    std::cout << summary << "\n";
    a2ck_string_free(summary);
    return 0;
  }
  if (build->parsed()) return run_stage(o, "build", false, true);
  if (matrices->parsed()) return run_stage(o, "matrices", true, true);
  if (verify->parsed()) return run_stage(o, "verify", false, true);
  if (ktheory->parsed()) return run_stage(o, "ktheory", false, true);
  return run_stage(o, "report", true, false);
}
