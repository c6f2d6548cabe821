#ifndef MLHARM_CLI_CONFIG_HPP
#define MLHARM_CLI_CONFIG_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlharm/errors.hpp"

namespace mlharm::cli {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Flat "key = value" configuration. '#' starts a comment; blank lines are
/// ignored; keys are unique.
class Config {
 public:
  static Config parse(std::string_view text);
  static Config load(const std::string& path);

  /// Later values win; used for command-line overrides.
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;

  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  unsigned get_unsigned(const std::string& key) const;
  unsigned get_unsigned_or(const std::string& key, unsigned fallback) const;
  std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;
  std::complex<double> get_complex(const std::string& key) const;
  std::complex<double> get_complex_or(const std::string& key, std::complex<double> fallback) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<std::complex<double>> get_complex_list(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

double parse_double(std::string_view text);
/// Accepts "x", "x+yi", "x-yi", "yi", "i", "-i".
std::complex<double> parse_complex(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);

}  // namespace mlharm::cli

#endif  // MLHARM_CLI_CONFIG_HPP
