#pragma once

// Batch front end. One flat option namespace shared by flags and the
// key = value config file (flags win); see `mddim --help`.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mddim/errors.hpp"

namespace mddim::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kSolverError = 2, kOracleFailure = 3 };

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Scalars are kept as text and read at the run precision (see expression.hpp).
struct RunConfig {
  std::string command;  // solve | sweep | optimize | validate-mapping | oracle
  std::string target;   // eigen | blasius | gelfand

  int order = 10;
  unsigned precision = 16;  // decimal digits; <= 16 runs in double
  std::optional<std::string> c0;
  std::optional<std::string> c1;
  std::string out;
  std::vector<std::string> columns;
  std::vector<int> residual_orders;
  int quadrature_nodes = 30;
  unsigned threads = 0;

  std::optional<std::string> epsilon;
  std::optional<std::string> mapping;
  std::optional<std::string> alpha;
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<std::string> a0;
  std::optional<std::string> a1;
  std::optional<std::string> a2;
  std::optional<std::string> lambda_stretch;
  std::optional<std::string> big_a;
  std::optional<std::string> b0;
  std::optional<std::string> b1;
  std::optional<std::string> f_preset;

  // sweep
  std::string param;
  std::optional<std::string> from;
  std::optional<std::string> to;
  int count = 11;
  bool reoptimize = false;

  // optimize (and sweep --reoptimize)
  int fit_order = 3;
  std::optional<double> c0_from;
  std::optional<double> c0_to;
  std::optional<double> c1_from;
  std::optional<double> c1_to;
  int grid_count = 61;

  // validate-mapping
  std::string kind;
  int budget = 50;
  unsigned seed = 1;

  // oracle
  double step = 1e-3;
  double eta_max = 20;
  int grid_n = 41;
};

// Throws ConfigError on bad flags or config files; returns nullopt when
// help or version output was requested and printed.
std::optional<RunConfig> parse_args(int argc, const char* const* argv);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with exceptions mapped to exit codes.
int main(int argc, const char* const* argv);

}  // namespace mddim::cli
