#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace robotask {

// Misuse of an API contract (double-send, stepping a finished episode, ...).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct TimeoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration problem; `path` points into the offending config subtree.
struct ConfigError : std::runtime_error {
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Goal-conditioned observation. Reward and success are computable from
// (achieved_goal, desired_goal) alone.
struct Observation {
  std::vector<double> robot_state;
  std::vector<double> task_state;
  std::vector<double> achieved_goal;
  std::vector<double> desired_goal;

  bool operator==(const Observation&) const = default;
};

// Continuous actions carry component values in [-1, 1]; discretized actions
// additionally carry the flat index they decode from.
struct Action {
  std::vector<double> values;
  std::int64_t index = -1;

  bool operator==(const Action&) const = default;
};

struct Transition {
  Observation obs;
  Action action;
  double reward = 0.0;
  Observation next_obs;
  bool terminal = false;
  bool truncated = false;
};

struct EnvId {
  int worker_index = 0;
  int slot_index = 0;

  auto operator<=>(const EnvId&) const = default;
};

struct Trajectory {
  EnvId env_id;
  std::vector<Transition> transitions;
  bool success = false;
};

// Throws ContractViolation unless next_obs of transition k equals obs of
// transition k+1 (goal fields included) and only the last transition carries
// terminal/truncated.
void validate_chaining(const Trajectory& trajectory);

}  // namespace robotask
