#include "robotask/robot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace robotask {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }
double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Rodrigues rotation of v about unit axis k by angle.
Vec3 rotate(const Vec3& k, double angle, const Vec3& v) {
  double c = std::cos(angle);
  double s = std::sin(angle);
  Vec3 kxv = cross(k, v);
  double kv = dot(k, v);
  return {v[0] * c + kxv[0] * s + k[0] * kv * (1.0 - c),
          v[1] * c + kxv[1] * s + k[1] * kv * (1.0 - c),
          v[2] * c + kxv[2] * s + k[2] * kv * (1.0 - c)};
}

constexpr Vec3 kZ{0.0, 0.0, 1.0};
constexpr Vec3 kY{0.0, 1.0, 0.0};

void validate(const RobotModel& m) {
  if (m.dof != static_cast<int>(m.joints.size()) ||
      m.dof != static_cast<int>(m.link_offsets.size())) {
    throw std::invalid_argument("robot '" + m.name + "': dof/joints/offsets mismatch");
  }
  if (m.max_joint_delta <= 0.0) {
    throw std::invalid_argument("robot '" + m.name + "': max_joint_delta must be > 0");
  }
  for (const auto& j : m.joints) {
    if (std::abs(norm(j.axis) - 1.0) > 1e-9) {
      throw std::invalid_argument("robot '" + m.name + "': joint axis not unit length");
    }
    if (!(j.limit_lo < j.limit_hi)) {
      throw std::invalid_argument("robot '" + m.name + "': joint limits lo < hi violated");
    }
  }
}

double clamp(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

}  // namespace

double RobotModel::total_chain_length() const {
  double total = 0.0;
  for (const auto& t : link_offsets) total += norm(t);
  return total;
}

bool RobotModel::is_planar() const {
  for (const auto& j : joints) {
    if (std::abs(std::abs(j.axis[2]) - 1.0) > 1e-12) return false;
  }
  for (const auto& t : link_offsets) {
    if (std::abs(t[2]) > 1e-12) return false;
  }
  return true;
}

std::vector<std::string> known_robots() {
  return {"panda", "ur5", "iiwa", "planar2", "planar3"};
}

// Link lengths are nominal published values rounded to centimeters; the tasks
// depend only on the reachable-workspace geometry.
RobotModel make_robot(const std::string& name) {
  RobotModel m;
  m.name = name;
  if (name == "panda") {
    m.dof = 7;
    m.has_gripper = true;
    m.max_joint_delta = 0.05;
    m.joints = {{kZ, -2.90, 2.90}, {kY, -1.76, 1.76}, {kZ, -2.90, 2.90}, {kY, -3.07, -0.07},
                {kZ, -2.90, 2.90}, {kY, -0.02, 3.75}, {kZ, -2.90, 2.90}};
    m.link_offsets = {{0, 0, 0.33}, {0, 0, 0},    {0, 0, 0.32}, {0.08, 0, 0},
                      {0, 0, 0.38}, {0, 0, 0},    {0.09, 0, 0.11}};
  } else if (name == "ur5") {
    m.dof = 6;
    m.has_gripper = true;
    m.max_joint_delta = 0.05;
    m.joints = {{kZ, -3.14, 3.14}, {kY, -3.14, 3.14}, {kY, -3.14, 3.14},
                {kY, -3.14, 3.14}, {kZ, -3.14, 3.14}, {kY, -3.14, 3.14}};
    m.link_offsets = {{0, 0, 0.09}, {0.42, 0, 0}, {0.39, 0, 0},
                      {0, 0, 0.11}, {0, 0, 0.09}, {0, 0, 0.23}};
  } else if (name == "iiwa") {
    m.dof = 7;
    m.has_gripper = true;
    m.max_joint_delta = 0.05;
    m.joints = {{kZ, -2.97, 2.97}, {kY, -2.09, 2.09}, {kZ, -2.97, 2.97}, {kY, -2.09, 2.09},
                {kZ, -2.97, 2.97}, {kY, -2.09, 2.09}, {kZ, -3.05, 3.05}};
    m.link_offsets = {{0, 0, 0.34}, {0, 0, 0}, {0, 0, 0.40}, {0, 0, 0},
                      {0, 0, 0.40}, {0, 0, 0}, {0, 0, 0.25}};
  } else if (name == "planar2") {
    m.dof = 2;
    m.has_gripper = false;
    m.max_joint_delta = 0.1;
    m.joints = {{kZ, -3.14159265358979, 3.14159265358979},
                {kZ, -3.14159265358979, 3.14159265358979}};
    m.link_offsets = {{0.5, 0, 0}, {0.5, 0, 0}};
  } else if (name == "planar3") {
    m.dof = 3;
    m.has_gripper = false;
    m.max_joint_delta = 0.1;
    m.joints = {{kZ, -3.14159265358979, 3.14159265358979},
                {kZ, -3.14159265358979, 3.14159265358979},
                {kZ, -3.14159265358979, 3.14159265358979}};
    m.link_offsets = {{0.4, 0, 0}, {0.4, 0, 0}, {0.4, 0, 0}};
  } else {
    std::string valid;
    for (const auto& n : known_robots()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown robot '" + name + "' (valid: " + valid + ")");
  }
  validate(m);
  return m;
}

RobotModel parse_robot_text(const std::string& text) {
  RobotModel m;
  m.name = "custom";
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "name") {
      ls >> m.name;
    } else if (key == "gripper") {
      int g = 0;
      ls >> g;
      m.has_gripper = g != 0;
    } else if (key == "max_joint_delta") {
      ls >> m.max_joint_delta;
    } else if (key == "joint") {
      JointSpec j;
      Vec3 offset;
      if (!(ls >> j.axis[0] >> j.axis[1] >> j.axis[2] >> j.limit_lo >> j.limit_hi >>
            offset[0] >> offset[1] >> offset[2])) {
        throw std::invalid_argument("robot text line " + std::to_string(lineno) +
                                    ": expected 'joint ax ay az lo hi ox oy oz'");
      }
      double n = norm(j.axis);
      if (n <= 0.0) {
        throw std::invalid_argument("robot text line " + std::to_string(lineno) +
                                    ": zero joint axis");
      }
      j.axis = (1.0 / n) * j.axis;
      m.joints.push_back(j);
      m.link_offsets.push_back(offset);
    } else {
      throw std::invalid_argument("robot text line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
    }
  }
  m.dof = static_cast<int>(m.joints.size());
  if (m.dof == 0) throw std::invalid_argument("robot text: no joints");
  validate(m);
  return m;
}

Vec3 forward_kinematics(const RobotModel& model, const std::vector<double>& joint_positions) {
  if (static_cast<int>(joint_positions.size()) != model.dof) {
    throw std::invalid_argument("forward_kinematics: expected " + std::to_string(model.dof) +
                                " joint positions, got " + std::to_string(joint_positions.size()));
  }
  Vec3 p{0.0, 0.0, 0.0};
  for (int i = model.dof - 1; i >= 0; --i) {
    p = rotate(model.joints[i].axis, joint_positions[i], model.link_offsets[i] + p);
  }
  return p;
}

RobotState robot_reset(const RobotModel& model, RngStream& rng, bool randomize) {
  RobotState s;
  s.joint_positions.resize(model.dof);
  for (int i = 0; i < model.dof; ++i) {
    const auto& j = model.joints[i];
    double mid = 0.5 * (j.limit_lo + j.limit_hi);
    double half = 0.25 * (j.limit_hi - j.limit_lo);  // central 50% of the range
    s.joint_positions[i] = rng.uniform(mid - half, mid + half);
  }
  s.gripper_aperture = 1.0;
  s.effective_damping.assign(model.dof, 1.0);
  s.effective_joint_delta = model.max_joint_delta;
  if (randomize) {
    double mult = clamp(rng.normal(1.0, model.dr.joint_delta_sigma), 0.1, 2.0);
    s.effective_joint_delta = model.max_joint_delta * mult;
    for (int i = 0; i < model.dof; ++i) {
      double d = rng.normal(model.dr.damping_mean, model.dr.damping_sigma);
      s.effective_damping[i] = clamp(d, 0.1, 1.0);
    }
  }
  return s;
}

RobotState robot_step(const RobotModel& model, const RobotState& state, const Action& action) {
  if (static_cast<int>(action.values.size()) != model.action_dim()) {
    throw std::invalid_argument("robot_step: expected action dim " +
                                std::to_string(model.action_dim()) + ", got " +
                                std::to_string(action.values.size()));
  }
  RobotState next = state;
  for (int i = 0; i < model.dof; ++i) {
    double a = clamp(action.values[i], -1.0, 1.0);
    double q = state.joint_positions[i] +
               a * state.effective_joint_delta * state.effective_damping[i];
    next.joint_positions[i] = clamp(q, model.joints[i].limit_lo, model.joints[i].limit_hi);
  }
  if (model.has_gripper) {
    double g = clamp(action.values[model.dof], -1.0, 1.0);
    next.gripper_aperture = clamp(state.gripper_aperture + g * 0.25, 0.0, 1.0);
  }
  return next;
}

std::vector<double> observed_robot_state(const RobotModel& model, const RobotState& state) {
  std::vector<double> out;
  out.reserve(model.dof + (model.has_gripper ? 1 : 0));
  for (int i = 0; i < model.dof; ++i) {
    const auto& j = model.joints[i];
    double t = (state.joint_positions[i] - j.limit_lo) / (j.limit_hi - j.limit_lo);
    out.push_back(2.0 * t - 1.0);
  }
  if (model.has_gripper) out.push_back(state.gripper_aperture);
  return out;
}

}  // namespace robotask
