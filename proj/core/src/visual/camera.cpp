#include "vizchat/visual/camera.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

namespace vizchat {
namespace {

double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

template <typename T>
T lerp(const T& a, const T& b, double t) {
  return a + (b - a) * t;
}

}  // namespace

Eigen::Matrix3d CameraState::orientation() const {
  using Eigen::AngleAxisd;
  using Eigen::Vector3d;
  return (AngleAxisd(radians(yaw), Vector3d::UnitY()) *
          AngleAxisd(radians(pitch), Vector3d::UnitX()) *
          AngleAxisd(radians(roll), Vector3d::UnitZ()))
      .toRotationMatrix();
}

Eigen::Vector3d CameraState::view_direction() const {
  return orientation() * Eigen::Vector3d(0.0, 0.0, -1.0);
}

Eigen::Vector3d CameraState::up() const { return orientation() * Eigen::Vector3d::UnitY(); }

Eigen::Vector3d CameraState::eye() const { return target - distance * view_direction(); }

double framing_distance(double radius) { return radius / std::sin(radians(kFramingHalfAngleDeg)); }

CameraState interpolate(const CameraState& from, const CameraState& to, double t) {
  if (t <= 0.0) return from;
  if (t >= 1.0) return to;
  CameraState out;
  out.target = lerp(from.target, to.target, t);
  out.distance = lerp(from.distance, to.distance, t);
  out.yaw = lerp(from.yaw, to.yaw, t);
  out.pitch = lerp(from.pitch, to.pitch, t);
  out.roll = lerp(from.roll, to.roll, t);
  return out;
}

CuttingPlaneState interpolate(const CuttingPlaneState& from, const CuttingPlaneState& to, double t) {
  if (t <= 0.0) return from;
  if (t >= 1.0) return to;
  if (!from.enabled) return to;  // a plane being switched on appears in place
  CuttingPlaneState out;
  const Eigen::Vector3d blended = lerp(from.normal, to.normal, t);
  out.normal = blended.norm() > 1e-12 ? blended.normalized() : to.normal;
  out.offset = lerp(from.offset, to.offset, t);
  out.anchor = lerp(from.anchor, to.anchor, t);
  out.enabled = from.enabled || to.enabled;
  return out;
}

}  // namespace vizchat
