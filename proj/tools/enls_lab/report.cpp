#include "enls_lab/report.hpp"

#include <cmath>

#include "enls/field_io.hpp"

namespace enls::lab {

void Summary::check(const std::string& name, double value, const std::string& relation,
                    double threshold) {
  bool ok = false;
  if (std::isfinite(value) || std::isinf(value)) {
    ok = relation == "<=" ? value <= threshold : value >= threshold;
  }
  checks_.push_back({name, value, relation, threshold, ok});
}

void Summary::require(const std::string& name, bool ok) {
  checks_.push_back({name, ok ? 1.0 : 0.0, "true", 1.0, ok});
}

void Summary::fail(const std::string& error) { errors_.push_back(error); }

bool Summary::pass() const {
  if (!errors_.empty()) return false;
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::ordered_json Summary::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["pass"] = pass();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["value"] = c.value;
    e["relation"] = c.relation;
    e["threshold"] = c.threshold;
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
  }
  j["metrics"] = metrics_;
  j["outputs"] = outputs_;
  j["errors"] = errors_;
  return j;
}

void write_json_atomic(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
  write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace enls::lab
