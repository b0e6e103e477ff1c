#include "pwo/image.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pwo/errors.hpp"

namespace pwo {

Image Image::zeros(int width, int height, int channels) {
  Image img;
  img.width = width;
  img.height = height;
  img.channels = channels;
  img.data.assign(static_cast<std::size_t>(width) * height * channels, 0.0);
  return img;
}

void Image::validate() const {
  if (width <= 0 || height <= 0)
    throw InvalidArgumentError("image dimensions must be positive");
  if (channels != 1 && channels != 3)
    throw InvalidArgumentError("image must have 1 or 3 channels");
  if (data.size() != static_cast<std::size_t>(width) * height * channels)
    throw InvalidArgumentError("image data size does not match dimensions");
  for (double v : data) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      throw InvalidArgumentError("image values must be finite and in [0,1]");
  }
}

DepthMap DepthMap::constant(int width, int height, double value) {
  DepthMap d;
  d.width = width;
  d.height = height;
  d.data.assign(static_cast<std::size_t>(width) * height, value);
  return d;
}

void DepthMap::validate() const {
  if (width <= 0 || height <= 0)
    throw InvalidArgumentError("depth dimensions must be positive");
  if (data.size() != static_cast<std::size_t>(width) * height)
    throw InvalidArgumentError("depth data size does not match dimensions");
  for (double v : data) {
    if (!std::isfinite(v) || v <= 0.0)
      throw InvalidArgumentError("depth values must be finite and > 0");
  }
}

Mask Mask::full(int width, int height) {
  Mask m;
  m.width = width;
  m.height = height;
  m.data.assign(static_cast<std::size_t>(width) * height, 1);
  return m;
}

Mask Mask::empty(int width, int height) {
  Mask m;
  m.width = width;
  m.height = height;
  m.data.assign(static_cast<std::size_t>(width) * height, 0);
  return m;
}

std::size_t Mask::count() const {
  std::size_t n = 0;
  for (auto v : data) n += (v != 0);
  return n;
}

double mean_intensity(const Image& img) {
  if (img.data.empty()) return 0.0;
  double sum = 0.0;
  for (double v : img.data) sum += v;
  return sum / static_cast<double>(img.data.size());
}

double intensity_variance(const Image& img) {
  if (img.data.empty()) return 0.0;
  const double mu = mean_intensity(img);
  double acc = 0.0;
  for (double v : img.data) acc += (v - mu) * (v - mu);
  return acc / static_cast<double>(img.data.size());
}

}  // namespace pwo
