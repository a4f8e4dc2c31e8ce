#pragma once

#include <stdexcept>
#include <string>

namespace enls {

/// Invalid parameters or a violated precondition detected before any work is done.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// The time integrator produced a non-finite or runaway state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, long step)
      : std::runtime_error(what), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

/// Requested data (snapshots, samples) are not available.
class MissingDataError : public std::runtime_error {
 public:
  explicit MissingDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enls

namespace enls {

/// A structural invariant (reality of a functional, a conservation identity) failed.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enls
