#pragma once

#include <optional>
#include <vector>

#include "msvlab/image.hpp"
#include "msvlab/synth/subject.hpp"

namespace msvlab::synth {

enum class ViewKind : int { CC = 0, MLO = 1 };

std::string view_name(ViewKind v);
ViewKind view_from_name(const std::string& s);

// MLO view transform: shear content by tan(20 degrees) along x, then rescale
// x by 1/(1+s) so the sheared square fills the frame; a bright triangular
// axilla band is added in the top-left image corner.
constexpr double kMloShearDeg = 20.0;
constexpr double kAxillaFrac = 0.32;   // leg length of the corner triangle, image fraction
constexpr double kAxillaBoost = 0.25;  // additive brightness inside the band
constexpr double kAxillaSoftEdge = 0.06;

// Affine map from content coordinates (x,y) in the unit square to image
// coordinates (u,v) in the unit square. Row-major 2x2 + offset (offset is 0
// for both views; kept for clarity).
struct ViewTransform {
  double m00, m01, m10, m11;
  void apply(double x, double y, double& u, double& v) const {
    u = m00 * x + m01 * y;
    v = m10 * x + m11 * y;
  }
  void invert(double u, double v, double& x, double& y) const;
};

ViewTransform view_transform(ViewKind view);

struct RenderResult {
  Image image;
  std::vector<BoxLabel> boxes;
};

// Rasterizes one view of a subject at the given resolution (>= 32), with 2x2
// supersampling. Returns nullopt when a lesion's transformed box falls
// entirely outside the frame; callers regenerate the subject in that case.
std::optional<RenderResult> render_view(const Subject& subject, ViewKind view, int resolution);

// Content intensity at (x,y) in the unit square, before any view overlay.
// Exposed for tests.
double content_value(const Subject& subject, double x, double y);

}  // namespace msvlab::synth
