#pragma once

#include <Eigen/Core>

namespace vizchat {

/// Pilot scale change: Up shows the parent, Down the nearest child.
enum class ScaleDirection { kUp, kDown };

/// Half of the field of view used when framing a bounding sphere.
inline constexpr double kFramingHalfAngleDeg = 30.0;

/// Orbit camera around `target`.
///
/// Orientation is R = Ry(yaw) * Rx(pitch) * Rz(roll) with right-handed
/// rotations: yaw about world up (+y), then pitch about the camera's right
/// axis, then roll about the view axis. The camera looks along R * (0,0,-1),
/// so the initial view direction is (0,0,-1) and a +90 degree yaw looks along
/// (-1,0,0), i.e. at the object's right-hand side. Negative pitch looks down
/// from above.
struct CameraState {
  Eigen::Vector3d target = Eigen::Vector3d::Zero();
  double distance = 1.0;
  double yaw = 0.0;
  double pitch = 0.0;
  double roll = 0.0;

  Eigen::Matrix3d orientation() const;
  Eigen::Vector3d view_direction() const;
  Eigen::Vector3d up() const;
  /// Eye position: target - distance * view_direction.
  Eigen::Vector3d eye() const;

  friend bool operator==(const CameraState& a, const CameraState& b) {
    return a.target == b.target && a.distance == b.distance && a.yaw == b.yaw &&
           a.pitch == b.pitch && a.roll == b.roll;
  }
};

/// Clip plane through `anchor - offset * normal`; geometry on the camera side
/// of it is hidden. With the normal along the view direction, offset = radius
/// puts the plane on the near border of a sphere centred at `anchor` and
/// offset = 0 cuts through its centre.
struct CuttingPlaneState {
  Eigen::Vector3d normal{0.0, 0.0, -1.0};
  double offset = 0.0;
  bool enabled = false;
  Eigen::Vector3d anchor = Eigen::Vector3d::Zero();

  friend bool operator==(const CuttingPlaneState& a, const CuttingPlaneState& b) {
    return a.normal == b.normal && a.offset == b.offset && a.enabled == b.enabled &&
           a.anchor == b.anchor;
  }
};

/// Distance at which a sphere of `radius` exactly fills the framing angle.
double framing_distance(double radius);

CameraState interpolate(const CameraState& from, const CameraState& to, double t);
CuttingPlaneState interpolate(const CuttingPlaneState& from, const CuttingPlaneState& to, double t);

}  // namespace vizchat
