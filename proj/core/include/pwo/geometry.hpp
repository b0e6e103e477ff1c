#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace pwo {

/// Pinhole camera intrinsics in pixels. Pixel (i,j) sits at continuous
/// coordinate (i,j) exactly; the principal point uses the same convention.
struct Intrinsics {
  double fx = 1.0;
  double fy = 1.0;
  double cx = 0.0;
  double cy = 0.0;

  Eigen::Matrix3d matrix() const;
  /// All four entries multiplied by 2^-level (pyramid level 0 = full res).
  Intrinsics for_level(int level) const;
  void validate() const;  // fx,fy > 0, everything finite
};

/// 6-dof pose: Euler angles (rx,ry,rz) in radians plus translation.
/// Canonical angle range (as produced by se3_to_pose) is (-pi, pi].
struct Pose6 {
  Eigen::Vector3d rot = Eigen::Vector3d::Zero();
  Eigen::Vector3d trans = Eigen::Vector3d::Zero();
};

/// Rigid transform as a 4x4 homogeneous matrix. The rotation block is kept
/// orthonormal with det +1 (checked to 1e-9 on construction from raw data);
/// points are column vectors acted on by left multiplication.
class Se3 {
 public:
  Se3() : mat_(Eigen::Matrix4d::Identity()) {}

  static Se3 identity() { return Se3(); }
  /// Validates the rotation block and bottom row; throws InvalidArgumentError.
  static Se3 from_matrix(const Eigen::Matrix4d& m);
  static Se3 from_rt(const Eigen::Matrix3d& rotation,
                     const Eigen::Vector3d& translation);

  const Eigen::Matrix4d& matrix() const { return mat_; }
  Eigen::Matrix3d rotation() const { return mat_.block<3, 3>(0, 0); }
  Eigen::Vector3d translation() const { return mat_.block<3, 1>(0, 3); }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return mat_.block<3, 3>(0, 0) * p + mat_.block<3, 1>(0, 3);
  }

  bool is_identity() const { return mat_ == Eigen::Matrix4d::Identity(); }

 private:
  struct Unchecked {};
  Se3(const Eigen::Matrix4d& m, Unchecked) : mat_(m) {}

  Eigen::Matrix4d mat_;

  friend Se3 compose(const Se3&, const Se3&);
  friend Se3 invert(const Se3&);
  friend Se3 reorthonormalized(const Se3&);
};

/// Rotation for intrinsic ZYX Euler angles: R = Rz(rz) * Ry(ry) * Rx(rx).
Eigen::Matrix3d euler_zyx(const Eigen::Vector3d& rot);
/// dR/d(rot[axis]) for the same parameterization, axis in {0,1,2}.
Eigen::Matrix3d euler_zyx_derivative(const Eigen::Vector3d& rot, int axis);

/// Nearest orthonormal matrix by the iterated-averaging polar iteration
/// X <- (X + X^-T)/2.
Eigen::Matrix3d orthonormalized(const Eigen::Matrix3d& m);
Se3 reorthonormalized(const Se3& t);

/// Rigid transform applying rotation Rz*Ry*Rx then translation.
/// Throws InvalidArgumentError on non-finite input.
Se3 pose_to_se3(const Pose6& p);

/// Inverse of pose_to_se3. Angles land in the canonical range; throws
/// DegenerateOrientationError when |cos(ry)| < 1e-6 (gimbal lock).
Pose6 se3_to_pose(const Se3& t);

/// Transform acting as `first` then `then` (matrix product then*first).
Se3 compose(const Se3& first, const Se3& then);
Se3 invert(const Se3& t);

/// Left-to-right composition of a chain, re-orthonormalizing the rotation
/// block every 32 compositions to bound drift.
Se3 compose_chain(std::span<const Se3> chain);

/// All pairwise relative transforms of an n-frame window: the n-1 adjacent
/// transforms are primitive, the rest are derived by composition along the
/// chain i -> i+1 -> ... -> j.
struct FrameWindow {
  int length = 0;
  std::vector<Se3> adjacent;                  // n-1 transforms i -> i+1
  std::map<std::pair<int, int>, Se3> pairs;   // (i,j), i < j

  const Se3& pair(int i, int j) const;  // throws InvalidArgumentError
  /// T_{from->to} for any from != to (inverts the stored pair when from > to);
  /// identity when from == to.
  Se3 relative(int from, int to) const;
};

/// Throws InvalidArgumentError unless adjacent.size() == n-1, n >= 2.
FrameWindow build_pose_graph(std::span<const Se3> adjacent, int n);

}  // namespace pwo
