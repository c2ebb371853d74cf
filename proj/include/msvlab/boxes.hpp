#pragma once

#include <string>

#include "msvlab/common.hpp"

namespace msvlab {

enum class LesionClass : int { Mass = 0, CalcCluster = 1 };
constexpr int kNumLesionClasses = 2;

std::string lesion_class_name(LesionClass c);
LesionClass lesion_class_from_name(const std::string& s);

// Axis-aligned ground-truth box in continuous pixel coordinates.
struct BoxLabel {
  LesionClass cls = LesionClass::Mass;
  float x_min = 0, y_min = 0, x_max = 0, y_max = 0;

  float width() const { return x_max - x_min; }
  float height() const { return y_max - y_min; }
  float area() const { return width() * height(); }
  bool valid() const { return x_min < x_max && y_min < y_max; }
};

}  // namespace msvlab
