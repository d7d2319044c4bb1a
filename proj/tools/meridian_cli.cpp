// Command-line front end; all geometry runs behind the shared C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meridian/meridian.h"

namespace {

bool slurp(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream os;
  os << in.rdbuf();
  out = os.str();
  return true;
}

int status_to_exit(meridian_status st) {
  switch (st) {
    case MERIDIAN_OK: return 0;
    case MERIDIAN_ERR_VERIFY_FAILED: return 1;
    case MERIDIAN_ERR_CONFIG: return 2;
    case MERIDIAN_ERR_EVAL: return 3;
    case MERIDIAN_ERR_NOT_MERIDIAN: return 4;
    default: return 5;
  }
}

int report_failure(meridian_status st) {
  std::cerr << "error: " << meridian_last_error() << "\n";
  return status_to_exit(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Second-order invariants, semi-parallelity and classification of "
               "meridian surfaces in E^4"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "csv", filter;

  CLI::App* analyze = app.add_subcommand("analyze", "Grid analysis to CSV or JSON");
  analyze->add_option("--config", config_path, "config JSON path")->required();
  analyze->add_option("--out", out_path, "output file path")->required();
  analyze->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* classify = app.add_subcommand("classify", "Classify a meridian config");
  classify->add_option("--config", config_path, "config JSON path")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in verification suite");
  verify->add_option("--filter", filter, "run only groups whose name contains this substring");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed() || classify->parsed()) {
    std::string config_json;
    if (!slurp(config_path, config_json)) {
      std::cerr << "error: cannot read config file " << config_path << "\n";
      return 2;
    }
    if (analyze->parsed()) {
      const meridian_status st = meridian_analyze(config_json.c_str(), out_path.c_str(),
                                                  format.c_str());
      if (st != MERIDIAN_OK) return report_failure(st);
      return 0;
    }
    std::vector<char> buf(1 << 16);
    size_t needed = 0;
    meridian_status st = meridian_classify(config_json.c_str(), buf.data(), buf.size(), &needed);
    if (st == MERIDIAN_ERR_BUFFER) {
      buf.resize(needed);
      st = meridian_classify(config_json.c_str(), buf.data(), buf.size(), &needed);
    }
    if (st != MERIDIAN_OK) return report_failure(st);
    std::fputs(buf.data(), stdout);
    return 0;
  }

  const meridian_status st = meridian_verify(filter.empty() ? nullptr : filter.c_str());
  if (st == MERIDIAN_ERR_VERIFY_FAILED) return 1;
  if (st != MERIDIAN_OK) return report_failure(st);
  return 0;
}
