#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace enls::lab {

struct Check {
  std::string name;
  double value = 0.0;
  std::string relation;  ///< "<=", ">=" or "true"
  double threshold = 0.0;
  bool pass = false;
};

/// Pass/fail record of one command run.
class Summary {
 public:
  explicit Summary(std::string command) : command_(std::move(command)) {}

  void check(const std::string& name, double value, const std::string& relation, double threshold);
  void require(const std::string& name, bool ok);
  void fail(const std::string& error);
  void output(const std::string& relative_path) { outputs_.push_back(relative_path); }

  nlohmann::ordered_json& metrics() { return metrics_; }
  bool pass() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::string command_;
  std::vector<Check> checks_;
  std::vector<std::string> outputs_;
  std::vector<std::string> errors_;
  nlohmann::ordered_json metrics_ = nlohmann::ordered_json::object();
};

void write_json_atomic(const std::filesystem::path& path, const nlohmann::ordered_json& j);

}  // namespace enls::lab
