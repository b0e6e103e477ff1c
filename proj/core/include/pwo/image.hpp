#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pwo {

/// Row-major intensity grid with values in [0,1]; 1 (gray) or 3 (RGB) channels.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> data;  // index = (y*width + x)*channels + c

  static Image zeros(int width, int height, int channels = 1);

  double& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }

  // Throws InvalidArgumentError unless dims, channel count, data size and
  // value range all hold.
  void validate() const;
};

/// Per-pixel depth grid in scene units. Valid entries are strictly positive;
/// readers pair a DepthMap with a Mask when pixels can be missing.
struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  static DepthMap constant(int width, int height, double value);

  double& at(int x, int y) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }

  // Strict form: every entry finite and > 0 (required by projection and
  // optimization). Throws InvalidArgumentError.
  void validate() const;
};

/// Boolean pixel grid (0/1), row-major.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  static Mask full(int width, int height);
  static Mask empty(int width, int height);

  std::uint8_t& at(int x, int y) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  std::size_t count() const;  // number of set pixels
};

/// Mean over all samples (all channels).
double mean_intensity(const Image& img);
/// Population variance of intensities over all samples.
double intensity_variance(const Image& img);

}  // namespace pwo
