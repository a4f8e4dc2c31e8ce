#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

#include "json.hpp"

namespace enls::lab {

inline constexpr const char* kEnvPrefix = "ENLS_";

/// Sectioned key/value configuration (INI syntax) with ENLS_SECTION_KEY environment
/// overrides. Every value read is echoed into resolved(), so manifests record exactly
/// the parameters a command used, defaults included.
class Config {
 public:
  Config() = default;
  static Config load(const std::filesystem::path& path);
  static Config from_string(const std::string& text, const std::string& origin = "<string>");

  /// Applies ENLS_<SECTION>_<KEY>=value overrides from the process environment.
  void apply_environment();
  void set(const std::string& section, const std::string& key, const std::string& value);

  bool has(const std::string& section, const std::string& key) const;

  double number(const std::string& section, const std::string& key) const;
  double number(const std::string& section, const std::string& key, double fallback) const;
  long integer(const std::string& section, const std::string& key) const;
  long integer(const std::string& section, const std::string& key, long fallback) const;
  bool boolean(const std::string& section, const std::string& key, bool fallback) const;
  std::string text(const std::string& section, const std::string& key) const;
  std::string text(const std::string& section, const std::string& key,
                   const std::string& fallback) const;
  std::vector<double> numbers(const std::string& section, const std::string& key,
                              const std::vector<double>& fallback) const;

  const nlohmann::ordered_json& resolved() const { return resolved_; }
  const std::string& origin() const { return origin_; }

 private:
  std::optional<std::string> raw(const std::string& section, const std::string& key) const;
  std::string required(const std::string& section, const std::string& key) const;
  [[noreturn]] void bad_value(const std::string& section, const std::string& key,
                              const std::string& value, const char* expected) const;

  boost::property_tree::ptree tree_;
  std::string origin_ = "<defaults>";
  mutable nlohmann::ordered_json resolved_ = nlohmann::ordered_json::object();
};

}  // namespace enls::lab
