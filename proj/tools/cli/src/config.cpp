#include "solfold_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace solfold::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(trim(part));
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError(field, "expected a finite number, got '" + text + "'");
  }
  return v;
}

template <class Int>
Int parse_integer(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(field, "expected an integer, got '" + text + "'");
  }
  return v;
}

const std::array<const char*, 5> kSuites{"sol", "heis", "kleinian", "quotient", "all"};

}  // namespace

std::size_t Range::count() const {
  return static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
}

const std::array<const char*, 14>& config_keys() {
  static const std::array<const char*, 14> keys{"suite", "A",       "lambda", "N",       "seed",
                                                "tol-scale", "samples", "out",  "format",  "z",
                                                "s-range",   "base",    "t-range", "in"};
  return keys;
}

RawValues read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read config file '" + path + "'");
  RawValues values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", "line " + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(t.substr(0, eq));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(key, "unknown config key '" + key + "'");
    }
    values[key] = trim(t.substr(eq + 1));
  }
  return values;
}

IntMat2 parse_int_matrix(const std::string& field, const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw ConfigError(field, "expected four comma-separated integers a,b,c,d");
  std::array<std::int64_t, 4> e{};
  for (std::size_t i = 0; i < 4; ++i) e[i] = parse_integer<std::int64_t>(field, parts[i]);
  const IntMat2 a = int_mat(e[0], e[1], e[2], e[3]);
  if (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) != 1) throw ConfigError(field, "matrix must have det 1");
  const std::int64_t tr = a(0, 0) + a(1, 1);
  if (tr >= -2 && tr <= 2) throw ConfigError(field, "matrix must be hyperbolic (|tr| > 2)");
  return a;
}

Range parse_range(const std::string& field, const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError(field, "expected lo:hi:step");
  Range r{parse_double(field, parts[0]), parse_double(field, parts[1]), parse_double(field, parts[2])};
  if (!(r.step > 0.0)) throw ConfigError(field, "step must be > 0");
  if (!(r.hi >= r.lo)) throw ConfigError(field, "hi must be >= lo");
  if ((r.hi - r.lo) / r.step > 1e6) throw ConfigError(field, "range has more than 1e6 samples");
  return r;
}

std::complex<double> parse_complex(const std::string& field, const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t.push_back(c);
  }
  if (t.empty()) throw ConfigError(field, "empty complex number");
  if (t.back() != 'i') return {parse_double(field, t), 0.0};
  t.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split_at = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string re = split_at == std::string::npos ? "" : t.substr(0, split_at);
  std::string im = split_at == std::string::npos ? t : t.substr(split_at);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (im.front() == '+') im.erase(0, 1);
  return {re.empty() ? 0.0 : parse_double(field, re), parse_double(field, im)};
}

RunConfig build_config(const std::string& command, const std::string& subcommand,
                       const RawValues& values) {
  RunConfig cfg;
  cfg.command = command;
  cfg.subcommand = subcommand;
  const auto get = [&](const char* key) -> const std::string* {
    const auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };

  if (const auto* v = get("suite")) {
    if (std::find(kSuites.begin(), kSuites.end(), *v) == kSuites.end()) {
      throw ConfigError("suite", "unknown suite '" + *v + "'");
    }
    cfg.suite = *v;
  }
  if (const auto* v = get("A")) cfg.A = parse_int_matrix("A", *v);
  if (const auto* v = get("lambda")) {
    cfg.lambda = parse_double("lambda", *v);
    if (!(cfg.lambda > 0.0) || cfg.lambda == 1.0) throw ConfigError("lambda", "lambda must be > 0 and != 1");
  }
  if (const auto* v = get("N")) {
    const int n = parse_integer<int>("N", *v);
    if (n < 0 || n > 64) throw ConfigError("N", "N must lie in [0, 64]");
    cfg.N = n;
  }
  if (const auto* v = get("seed")) cfg.seed = parse_integer<std::uint64_t>("seed", *v);
  if (const auto* v = get("tol-scale")) {
    cfg.tol_scale = parse_double("tol-scale", *v);
    if (!(cfg.tol_scale > 0.0)) throw ConfigError("tol-scale", "tol-scale must be > 0");
  }
  if (const auto* v = get("samples")) {
    const auto n = parse_integer<std::int64_t>("samples", *v);
    if (n < 1 || n > 10000000) throw ConfigError("samples", "samples must lie in [1, 1e7]");
    cfg.samples = static_cast<std::size_t>(n);
  }
  if (const auto* v = get("out")) cfg.out = *v;
  if (const auto* v = get("in")) cfg.in = *v;
  if (const auto* v = get("format")) {
    if (*v != "json" && *v != "csv") throw ConfigError("format", "format must be json or csv");
    cfg.format = *v;
  }
  if (const auto* v = get("z")) {
    const auto parts = split(*v, ',');
    if (parts.size() != 4) throw ConfigError("z", "expected x1,y1,x2,y2");
    std::array<double, 4> z{};
    for (std::size_t i = 0; i < 4; ++i) z[i] = parse_double("z", parts[i]);
    if (!(z[1] > 0.0 && z[3] > 0.0)) throw ConfigError("z", "imaginary parts must be > 0");
    cfg.z = z;
  }
  if (const auto* v = get("s-range")) cfg.s_range = parse_range("s-range", *v);
  if (const auto* v = get("t-range")) cfg.t_range = parse_range("t-range", *v);
  if (const auto* v = get("base")) {
    const auto parts = split(*v, ',');
    if (parts.size() != 2) throw ConfigError("base", "expected two complex numbers z1,z2");
    for (std::size_t i = 0; i < 2; ++i) {
      cfg.base[i] = parse_complex("base", parts[i]);
      if (!(cfg.base[i].imag() > 0.0)) throw ConfigError("base", "imaginary parts must be > 0");
    }
  }
  return cfg;
}

}  // namespace solfold::cli
