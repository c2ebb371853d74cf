#pragma once

#include <vector>

#include "msvlab/boxes.hpp"
#include "msvlab/common.hpp"

namespace msvlab::synth {

// Knobs for latent subject generation. All positions and radii are fractions
// of the unit content square.
struct GenConfig {
  int max_lesions = 4;
  // P(lesion count = k) for k = 0..max_lesions.
  std::vector<double> lesion_count_probs = {0.10, 0.30, 0.30, 0.20, 0.10};
  double radius_min = 0.06;
  double radius_max = 0.15;
  double delta_min = 0.12;
  double delta_max = 0.50;
  double center_margin = 0.14;  // lesion centers kept this far from the square edge
  double base_intensity_min = 0.30;
  double base_intensity_max = 0.52;
  double texture_freq_min = 1.5;
  double texture_freq_max = 4.0;

  void validate() const;
};

struct LatentLesion {
  LesionClass cls = LesionClass::Mass;
  double cx = 0.5, cy = 0.5;  // center in the unit content square
  double radius = 0.1;        // fraction of image side
  double intensity_delta = 0.2;
};

struct BackgroundParams {
  double texture_freq = 2.0;
  double base_intensity = 0.4;
};

// Latent content from which every view and style of one "breast" renders.
struct Subject {
  int subject_id = 0;
  uint64_t rng_seed = 0;
  std::vector<LatentLesion> lesions;
  BackgroundParams background;
};

// Deterministic function of (seed, cfg). The high 32 bits of the seed become
// the subject id, so callers control id uniqueness through seed construction.
Subject make_subject(uint64_t seed, const GenConfig& cfg);

// Seed layout helper used by dataset builders: unique id in the high bits,
// well-mixed entropy in the low bits.
inline uint64_t subject_seed(uint64_t master_seed, int subject_id, int attempt = 0) {
  uint64_t low = mix_seed(master_seed, static_cast<uint64_t>(subject_id),
                          static_cast<uint64_t>(attempt)) & 0xffffffffULL;
  return (static_cast<uint64_t>(static_cast<uint32_t>(subject_id)) << 32) | low;
}

}  // namespace msvlab::synth
