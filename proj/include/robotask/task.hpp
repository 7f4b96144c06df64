#pragma once

#include <string>
#include <vector>

#include "robotask/robot.hpp"
#include "robotask/rng.hpp"

namespace robotask {

enum class RewardMode { Sparse, Dense };
enum class TaskKind { Reach, PickPlace, Throw };

struct Box {
  Vec3 lo{0, 0, 0};
  Vec3 hi{0, 0, 0};

  bool contains(const Vec3& p, double slack = 0.0) const;
  Vec3 sample(RngStream& rng) const;
};

struct TaskSpec {
  TaskKind kind = TaskKind::Reach;
  std::string name = "reach";
  int max_steps = 100;
  double success_threshold = 0.05;  // meters
  Box workspace;
  RewardMode reward_mode = RewardMode::Sparse;
  double grasp_radius = 0.05;
  double dt = 1.0 / 240.0;  // seconds per ballistic substep
  int substeps = 4;
  double gravity_mean = 9.81;
  double gravity_sigma = 0.0;
  // Arm geometry the task is sized against (throw targets land outside reach).
  double arm_reach = 1.0;
  Vec3 arm_base{0, 0, 0};
};

struct TaskState {
  Vec3 object_position{0, 0, 0};
  Vec3 object_velocity{0, 0, 0};
  bool object_held = false;
  Vec3 target_position{0, 0, 0};
  double effective_gravity = 9.81;
  bool in_flight = false;
  Vec3 last_ee{0, 0, 0};  // end-effector position at the previous step
};

std::vector<std::string> known_tasks();

// Defaults sized to the given robot: workspace spans ~70% of reach for planar
// arms (z pinned to 0) and a raised box for spatial arms.
TaskSpec make_task(const std::string& name, const RobotModel& robot);

struct TaskResetResult {
  TaskState state;
  std::vector<double> desired_goal;
};

TaskResetResult task_reset(const TaskSpec& spec, RngStream& rng, bool randomize,
                           const Vec3& ee_position);

TaskState task_step(const TaskSpec& spec, const TaskState& state, const Vec3& ee_position,
                    double gripper_aperture);

// Pure functions of the goal pair; no task state is consulted.
double compute_reward(const std::vector<double>& achieved_goal,
                      const std::vector<double>& desired_goal, const TaskSpec& spec);
bool success_criterion(const std::vector<double>& achieved_goal,
                       const std::vector<double>& desired_goal, const TaskSpec& spec);

std::vector<double> achieved_goal_of(const TaskSpec& spec, const Vec3& ee_position,
                                     const TaskState& state);

// Agent-visible task state (object position and flags, empty for reach).
std::vector<double> observed_task_state(const TaskSpec& spec, const TaskState& state);

// Goal-space helpers shared with trajectory relabeling.
double goal_distance(const std::vector<double>& a, const std::vector<double>& b);
double goal_reward(double dist, RewardMode mode, double threshold);
bool goal_success(double dist, double threshold);

}  // namespace robotask
