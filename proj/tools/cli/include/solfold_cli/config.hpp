#pragma once

#include <solfold/kleinian.hpp>

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace solfold::cli {

// Invalid configuration value; `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// lo:hi:step, inclusive of both ends; round((hi - lo) / step) + 1 samples.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;

  std::size_t count() const;
  double at(std::size_t i) const { return lo + static_cast<double>(i) * step; }
};

using RawValues = std::map<std::string, std::string>;

// Keys accepted in config files and as --flags.
const std::array<const char*, 14>& config_keys();

struct RunConfig {
  std::string command;     // verify | export | report
  std::string subcommand;  // export: flow | leaf-metric | limit-set | orbit | domain; report: render | notes
  std::string suite = "all";
  IntMat2 A = int_mat(2, 1, 1, 1);
  double lambda = 2.718281828459045;
  std::optional<int> N;
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
  std::size_t samples = 1000;
  std::string out;  // empty: standard output
  std::string format;
  std::optional<std::array<double, 4>> z;
  Range s_range{-2.0, 2.0, 0.1};
  std::array<std::complex<double>, 2> base{std::complex<double>(0.0, 1.0),
                                           std::complex<double>(0.0, 1.0)};
  Range t_range{-2.0, 2.0, 0.5};
  std::string in;
};

// Flat key=value file; blank lines and lines starting with '#' are ignored.
RawValues read_config_file(const std::string& path);

// Validates raw values into a RunConfig. Throws ConfigError.
RunConfig build_config(const std::string& command, const std::string& subcommand,
                       const RawValues& values);

IntMat2 parse_int_matrix(const std::string& field, const std::string& text);
Range parse_range(const std::string& field, const std::string& text);
std::complex<double> parse_complex(const std::string& field, const std::string& text);

}  // namespace solfold::cli
