// Command-line front end; links only the C API of the shared library.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pairedkernel.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(1);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CommonFlags {
  int grid = 4096;
  int cutoff = 128;
  double tol = 1e-6;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--grid", f.grid, "FFT grid size (power of two)");
  cmd->add_option("--cutoff", f.cutoff, "analytic trial degree of the verifier");
  cmd->add_option("--tol", f.tol, "membership residual tolerance");
  cmd->add_option("--out", f.out, "write the report to a file instead of stdout");
}

std::string config_json(const CommonFlags& f, bool alpha_check) {
  std::ostringstream ss;
  ss << "{\"grid\":" << f.grid << ",\"cutoff\":" << f.cutoff << ",\"residual_tol\":" << f.tol;
  if (alpha_check) ss << ",\"alpha_check\":true";
  if (const char* seed = std::getenv("PK_SEED")) ss << ",\"seed\":" << seed;
  ss << "}";
  return ss.str();
}

int emit(pk_status status, pk_report* report, const std::string& out_path) {
  if (report) {
    const char* text = pk_report_json(report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << text;
    }
    pk_report_free(report);
  }
  if (status != PK_OK) std::cerr << "error: " << pk_last_error() << "\n";
  return int(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernels of paired and truncated Toeplitz operators with rational symbols"};
  app.require_subcommand(1);

  CommonFlags kf, mf, af, vf, df;
  std::string pair_file, a_file, b_file, spec_file;
  int k = 1;
  bool alpha_check = false;

  CLI::App* kernel = app.add_subcommand("kernel", "projected kernel of a symbol pair");
  kernel->add_option("pair", pair_file, "pair JSON file")->required();
  add_common(kernel, kf);

  CLI::App* minimal = app.add_subcommand("minimal", "minimal Toeplitz kernel containing b ker T_a");
  minimal->add_option("a", a_file, "symbol a JSON file")->required();
  minimal->add_option("b", b_file, "symbol b JSON file")->required();
  add_common(minimal, mf);

  CLI::App* atto = app.add_subcommand("atto", "kernel of a finite-rank truncated operator");
  atto->add_option("spec", spec_file, "spec JSON file")->required();
  atto->add_flag("--alpha-check", alpha_check, "re-run numerically with a second target space");
  add_common(atto, af);

  CLI::App* verify = app.add_subcommand("verify", "numerical verification of a pair or claim");
  verify->add_option("pair", pair_file, "pair JSON file (optionally with a claim)")->required();
  add_common(verify, vf);

  CLI::App* decompose = app.add_subcommand("decompose", "peel origin-normalized directions");
  decompose->add_option("pair", pair_file, "pair JSON file")->required();
  decompose->add_option("k", k, "number of directions")->required();
  add_common(decompose, df);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  pk_report* report = nullptr;
  if (kernel->parsed()) {
    pk_status s = pk_kernel(read_file(pair_file).c_str(), config_json(kf, false).c_str(), &report);
    return emit(s, report, kf.out);
  }
  if (minimal->parsed()) {
    std::string request = "{\"a\":" + read_file(a_file) + ",\"b\":" + read_file(b_file) + "}";
    pk_status s = pk_minimal(request.c_str(), config_json(mf, false).c_str(), &report);
    return emit(s, report, mf.out);
  }
  if (atto->parsed()) {
    pk_status s = pk_atto(read_file(spec_file).c_str(), config_json(af, alpha_check).c_str(), &report);
    return emit(s, report, af.out);
  }
  if (verify->parsed()) {
    pk_status s = pk_verify(read_file(pair_file).c_str(), config_json(vf, false).c_str(), &report);
    return emit(s, report, vf.out);
  }
  if (decompose->parsed()) {
    pk_status s =
        pk_decompose(read_file(pair_file).c_str(), k, config_json(df, false).c_str(), &report);
    return emit(s, report, df.out);
  }
  return 1;
}
