#pragma once

#include <string>
#include <vector>

#include "msvlab/common.hpp"

namespace msvlab {

// Single-channel image, row-major float32 pixels in [0,1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<float> pixels;

  Image() = default;
  Image(int h, int w) : height(h), width(w), pixels(static_cast<size_t>(h) * w, 0.f) {}

  float& at(int y, int x) { return pixels[static_cast<size_t>(y) * width + x]; }
  float at(int y, int x) const { return pixels[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return pixels.size(); }

  float min_value() const;
  float max_value() const;
  float mean_value() const;
  bool all_finite() const;
};

// Raw container format: 8-byte header (height, width as little-endian uint32)
// followed by row-major little-endian float32 pixels.
void save_image(const Image& img, const std::string& path);
Image load_image(const std::string& path);

// 8-bit binary PGM (P5) for human inspection.
void save_pgm(const Image& img, const std::string& path);

}  // namespace msvlab
