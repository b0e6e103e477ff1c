#include "pwo/geometry.hpp"

#include <cmath>
#include <string>

#include "pwo/errors.hpp"

namespace pwo {

namespace {

constexpr double kRotationTol = 1e-9;
constexpr double kGimbalTol = 1e-6;
constexpr int kReorthoCadence = 32;

bool finite(const Eigen::Vector3d& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

}  // namespace

Eigen::Matrix3d Intrinsics::matrix() const {
  Eigen::Matrix3d k = Eigen::Matrix3d::Identity();
  k(0, 0) = fx;
  k(1, 1) = fy;
  k(0, 2) = cx;
  k(1, 2) = cy;
  return k;
}

Intrinsics Intrinsics::for_level(int level) const {
  const double s = std::ldexp(1.0, -level);  // 2^-level
  return Intrinsics{fx * s, fy * s, cx * s, cy * s};
}

void Intrinsics::validate() const {
  if (!(fx > 0.0) || !(fy > 0.0) || !std::isfinite(fx) || !std::isfinite(fy) ||
      !std::isfinite(cx) || !std::isfinite(cy))
    throw InvalidArgumentError("intrinsics: fx,fy must be > 0 and all finite");
}

Se3 Se3::from_matrix(const Eigen::Matrix4d& m) {
  if (!m.allFinite()) throw InvalidArgumentError("se3: non-finite matrix");
  if (m(3, 0) != 0.0 || m(3, 1) != 0.0 || m(3, 2) != 0.0 || m(3, 3) != 1.0)
    throw InvalidArgumentError("se3: bottom row must be exactly 0 0 0 1");
  const Eigen::Matrix3d r = m.block<3, 3>(0, 0);
  const Eigen::Matrix3d gram = r.transpose() * r;
  if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > kRotationTol)
    throw InvalidArgumentError("se3: rotation block not orthonormal");
  if (r.determinant() < 0.0)
    throw InvalidArgumentError("se3: rotation block must have det +1");
  return Se3(m, Unchecked{});
}

Se3 Se3::from_rt(const Eigen::Matrix3d& rotation,
                 const Eigen::Vector3d& translation) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.block<3, 3>(0, 0) = rotation;
  m.block<3, 1>(0, 3) = translation;
  return from_matrix(m);
}

Eigen::Matrix3d euler_zyx(const Eigen::Vector3d& rot) {
  const double ca = std::cos(rot.x()), sa = std::sin(rot.x());
  const double cb = std::cos(rot.y()), sb = std::sin(rot.y());
  const double cg = std::cos(rot.z()), sg = std::sin(rot.z());
  Eigen::Matrix3d r;
  r << cg * cb, cg * sb * sa - sg * ca, cg * sb * ca + sg * sa,
       sg * cb, sg * sb * sa + cg * ca, sg * sb * ca - cg * sa,
       -sb,     cb * sa,                cb * ca;
  return r;
}

Eigen::Matrix3d euler_zyx_derivative(const Eigen::Vector3d& rot, int axis) {
  const double ca = std::cos(rot.x()), sa = std::sin(rot.x());
  const double cb = std::cos(rot.y()), sb = std::sin(rot.y());
  const double cg = std::cos(rot.z()), sg = std::sin(rot.z());
  Eigen::Matrix3d d;
  switch (axis) {
    case 0:  // d/d rx
      d << 0, cg * sb * ca + sg * sa, -cg * sb * sa + sg * ca,
           0, sg * sb * ca - cg * sa, -sg * sb * sa - cg * ca,
           0, cb * ca,                -cb * sa;
      return d;
    case 1:  // d/d ry
      d << -cg * sb, cg * cb * sa, cg * cb * ca,
           -sg * sb, sg * cb * sa, sg * cb * ca,
           -cb,      -sb * sa,     -sb * ca;
      return d;
    case 2:  // d/d rz
      d << -sg * cb, -sg * sb * sa - cg * ca, -sg * sb * ca + cg * sa,
           cg * cb,  cg * sb * sa - sg * ca,  cg * sb * ca + sg * sa,
           0,        0,                       0;
      return d;
    default:
      throw InvalidArgumentError("euler derivative axis must be 0, 1 or 2");
  }
}

Eigen::Matrix3d orthonormalized(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d x = m;
  for (int it = 0; it < 32; ++it) {
    const Eigen::Matrix3d next = 0.5 * (x + x.inverse().transpose());
    const double delta = (next - x).cwiseAbs().maxCoeff();
    x = next;
    if (delta < 1e-15) break;
  }
  return x;
}

Se3 reorthonormalized(const Se3& t) {
  Eigen::Matrix4d m = t.matrix();
  m.block<3, 3>(0, 0) = orthonormalized(t.rotation());
  return Se3(m, Se3::Unchecked{});
}

Se3 pose_to_se3(const Pose6& p) {
  if (!finite(p.rot) || !finite(p.trans))
    throw InvalidArgumentError("pose: non-finite component");
  return Se3::from_rt(euler_zyx(p.rot), p.trans);
}

Pose6 se3_to_pose(const Se3& t) {
  const Eigen::Matrix3d r = t.rotation();
  const double sb = -r(2, 0);
  const double cb = std::sqrt(std::max(0.0, 1.0 - sb * sb));
  if (cb < kGimbalTol)
    throw DegenerateOrientationError(
        "se3_to_pose: pitch within 1e-6 of gimbal lock");
  Pose6 p;
  p.rot.x() = std::atan2(r(2, 1), r(2, 2));
  p.rot.y() = std::asin(std::clamp(sb, -1.0, 1.0));
  p.rot.z() = std::atan2(r(1, 0), r(0, 0));
  p.trans = t.translation();
  return p;
}

Se3 compose(const Se3& first, const Se3& then) {
  Eigen::Matrix4d m = then.matrix() * first.matrix();
  m.row(3) << 0, 0, 0, 1;
  return Se3(m, Se3::Unchecked{});
}

Se3 invert(const Se3& t) {
  const Eigen::Matrix3d rt = t.rotation().transpose();
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.block<3, 3>(0, 0) = rt;
  m.block<3, 1>(0, 3) = -(rt * t.translation());
  return Se3(m, Se3::Unchecked{});
}

Se3 compose_chain(std::span<const Se3> chain) {
  if (chain.empty()) return Se3::identity();
  Se3 acc = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) {
    acc = compose(acc, chain[i]);
    if (i % kReorthoCadence == 0) acc = reorthonormalized(acc);
  }
  return acc;
}

const Se3& FrameWindow::pair(int i, int j) const {
  const auto it = pairs.find({i, j});
  if (it == pairs.end())
    throw InvalidArgumentError("frame window: no pair (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
  return it->second;
}

Se3 FrameWindow::relative(int from, int to) const {
  if (from == to) return Se3::identity();
  if (from < to) return pair(from, to);
  return invert(pair(to, from));
}

FrameWindow build_pose_graph(std::span<const Se3> adjacent, int n) {
  if (n < 2)
    throw InvalidArgumentError("frame window needs at least 2 frames");
  if (static_cast<int>(adjacent.size()) != n - 1)
    throw InvalidArgumentError(
        "pose graph: expected " + std::to_string(n - 1) +
        " adjacent transforms, got " + std::to_string(adjacent.size()));
  FrameWindow w;
  w.length = n;
  w.adjacent.assign(adjacent.begin(), adjacent.end());
  for (int i = 0; i < n - 1; ++i) w.pairs.emplace(std::make_pair(i, i + 1), adjacent[i]);
  for (int span = 2; span < n; ++span) {
    for (int i = 0; i + span < n; ++i) {
      const int j = i + span;
      w.pairs.emplace(std::make_pair(i, j),
                      compose(w.pair(i, j - 1), adjacent[j - 1]));
    }
  }
  return w;
}

}  // namespace pwo
