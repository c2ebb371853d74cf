#include "msvlab/image.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>

#include "msvlab/boxes.hpp"

static_assert(std::endian::native == std::endian::little,
              "raw image container assumes a little-endian host");

namespace msvlab {

float Image::min_value() const {
  return pixels.empty() ? 0.f : *std::min_element(pixels.begin(), pixels.end());
}

float Image::max_value() const {
  return pixels.empty() ? 0.f : *std::max_element(pixels.begin(), pixels.end());
}

float Image::mean_value() const {
  if (pixels.empty()) return 0.f;
  double s = 0.0;
  for (float v : pixels) s += v;
  return static_cast<float>(s / pixels.size());
}

bool Image::all_finite() const {
  for (float v : pixels) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

void save_image(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RunError("cannot open for write: " + path);
  uint32_t h = static_cast<uint32_t>(img.height);
  uint32_t w = static_cast<uint32_t>(img.width);
  out.write(reinterpret_cast<const char*>(&h), 4);
  out.write(reinterpret_cast<const char*>(&w), 4);
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size() * sizeof(float)));
  if (!out) throw RunError("write failed: " + path);
}

Image load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RunError("cannot open image: " + path);
  uint32_t h = 0, w = 0;
  in.read(reinterpret_cast<char*>(&h), 4);
  in.read(reinterpret_cast<char*>(&w), 4);
  if (!in || h == 0 || w == 0 || h > 1u << 16 || w > 1u << 16)
    throw RunError("bad image header: " + path);
  Image img(static_cast<int>(h), static_cast<int>(w));
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size() * sizeof(float)));
  if (!in) throw RunError("truncated image: " + path);
  return img;
}

void save_pgm(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RunError("cannot open for write: " + path);
  char header[64];
  int n = std::snprintf(header, sizeof(header), "P5\n%d %d\n255\n", img.width, img.height);
  out.write(header, n);
  std::vector<unsigned char> bytes(img.pixels.size());
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    float v = clamp01f(img.pixels[i]);
    bytes[i] = static_cast<unsigned char>(std::lround(v * 255.f));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw RunError("write failed: " + path);
}

std::string lesion_class_name(LesionClass c) {
  return c == LesionClass::Mass ? "mass" : "calc_cluster";
}

LesionClass lesion_class_from_name(const std::string& s) {
  if (s == "mass") return LesionClass::Mass;
  if (s == "calc_cluster") return LesionClass::CalcCluster;
  throw ConfigError("unknown lesion class: " + s);
}

std::string to_hex(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

std::vector<int> Rng::sample_without_replacement(int pool_size, int n) {
  if (n > pool_size) throw std::invalid_argument("sample_without_replacement: n > pool");
  std::vector<int> idx(static_cast<size_t>(pool_size));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < n; ++i) {
    int j = uniform_int(i, pool_size - 1);
    std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  }
  idx.resize(static_cast<size_t>(n));
  return idx;
}

}  // namespace msvlab
