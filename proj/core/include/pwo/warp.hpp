#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pwo/geometry.hpp"
#include "pwo/image.hpp"

namespace pwo {

/// Minimum z (scene units) in front of the camera for a projection to count.
inline constexpr double kZMin = 1e-6;

/// Continuous source coordinates for every target pixel. A pixel is invalid
/// when its projection lands behind the camera (z <= kZMin) or samples
/// outside [margin, W-1-margin] x [margin, H-1-margin].
struct WarpField {
  int width = 0;
  int height = 0;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<std::uint8_t> valid;

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width + x;
  }
};

/// Interpolation cell for coordinate x in a row/column of `extent` samples:
/// i0 is the left/top sample, frac the offset into [i0, i0+1]. Exact integer
/// coordinates > 0 use the left cell (frac = 1), which also keeps
/// x = extent-1 in range. Caller guarantees x in [0, extent-1].
struct CellCoord {
  int i0;
  double frac;
};
inline CellCoord sample_cell(double x, int extent) {
  double fl = std::floor(x);
  int i0 = static_cast<int>(fl);
  double frac = x - fl;
  if (frac == 0.0 && i0 > 0) {
    i0 -= 1;
    frac = 1.0;
  }
  if (i0 + 1 > extent - 1) {  // only reachable for x == extent-1 == 0 guards
    i0 = extent - 2;
    frac = 1.0;
  }
  return {i0, frac};
}

/// Back-project every pixel of `depth` with K, transform by T and project
/// again; coordinates are kept at sub-pixel precision. An exact identity
/// transform maps every pixel to its own coordinates.
WarpField project_pixels(const DepthMap& depth, const Intrinsics& K,
                         const Se3& T, int border_margin = 0);

/// Differentiable bilinear sampling: each output pixel is the 4-neighbor
/// weighted sum with weights proportional to spatial proximity (sum = 1).
/// Invalid or out-of-range coordinates produce value 0 and a cleared mask bit.
std::pair<Image, Mask> bilinear_sample(const Image& img,
                                       const WarpField& coords);

/// Warp `source` into the target view: bilinear_sample(source,
/// project_pixels(target_depth, K, T_target_to_source)).
std::pair<Image, Mask> reconstruct(const DepthMap& target_depth,
                                   const Image& source, const Intrinsics& K,
                                   const Se3& T_target_to_source);

}  // namespace pwo
