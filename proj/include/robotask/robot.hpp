#pragma once

#include <array>
#include <string>
#include <vector>

#include "robotask/rng.hpp"
#include "robotask/types.hpp"

namespace robotask {

using Vec3 = std::array<double, 3>;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
double norm(const Vec3& v);
double distance(const Vec3& a, const Vec3& b);

struct JointSpec {
  Vec3 axis{0.0, 0.0, 1.0};  // unit length
  double limit_lo = -3.14;
  double limit_hi = 3.14;
};

// Per-reset perturbations of motion parameters. Sampled multipliers are
// clamped to (0.1, 2.0); damping additionally stays in (0, 1].
struct RobotRandomization {
  double joint_delta_sigma = 0.0;
  double damping_mean = 1.0;
  double damping_sigma = 0.0;
};

// Kinematic serial chain. link_offsets[i] points from joint i to joint i+1
// (last one to the end effector), expressed in the parent frame at zero pose.
struct RobotModel {
  std::string name;
  int dof = 0;
  std::vector<JointSpec> joints;
  std::vector<Vec3> link_offsets;
  bool has_gripper = false;
  double max_joint_delta = 0.1;  // radians per step, nominal
  RobotRandomization dr;

  int action_dim() const { return dof + (has_gripper ? 1 : 0); }
  double total_chain_length() const;
  bool is_planar() const;  // all axes +-z, all offsets in the z=0 plane
};

struct RobotState {
  std::vector<double> joint_positions;  // radians, always within limits
  double gripper_aperture = 1.0;        // 1 = fully open
  double effective_joint_delta = 0.0;
  std::vector<double> effective_damping;
};

std::vector<std::string> known_robots();
RobotModel make_robot(const std::string& name);

// Text format for custom arms:
//   name <string>
//   gripper <0|1>
//   max_joint_delta <radians>
//   joint <ax> <ay> <az> <lo> <hi> <ox> <oy> <oz>
RobotModel parse_robot_text(const std::string& text);

Vec3 forward_kinematics(const RobotModel& model, const std::vector<double>& joint_positions);

RobotState robot_reset(const RobotModel& model, RngStream& rng, bool randomize);
RobotState robot_step(const RobotModel& model, const RobotState& state, const Action& action);

// Joint positions mapped to [-1, 1] over their limit range, gripper aperture
// appended when present.
std::vector<double> observed_robot_state(const RobotModel& model, const RobotState& state);

}  // namespace robotask
