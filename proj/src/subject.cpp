#include "msvlab/synth/subject.hpp"

#include <cmath>

namespace msvlab::synth {

void GenConfig::validate() const {
  if (max_lesions < 0 || max_lesions > 4)
    throw ConfigError("gen.max_lesions must be in [0,4]");
  if (static_cast<int>(lesion_count_probs.size()) != max_lesions + 1)
    throw ConfigError("gen.lesion_count_probs must have max_lesions+1 entries");
  double s = 0;
  for (double p : lesion_count_probs) {
    if (p < 0) throw ConfigError("gen.lesion_count_probs entries must be >= 0");
    s += p;
  }
  if (std::abs(s - 1.0) > 1e-9) throw ConfigError("gen.lesion_count_probs must sum to 1");
  if (!(radius_min >= 0.03 && radius_max <= 0.15 && radius_min <= radius_max))
    throw ConfigError("gen.radius range must lie within [0.03, 0.15]");
  if (!(delta_min >= 0.1 && delta_max <= 0.5 && delta_min <= delta_max))
    throw ConfigError("gen.delta range must lie within [0.1, 0.5]");
  if (center_margin < 0 || center_margin >= 0.5)
    throw ConfigError("gen.center_margin must be in [0, 0.5)");
  if (calc_dots_min < 5) throw ConfigError("gen.calc_dots_min must be >= 5");
  if (calc_dots_max < calc_dots_min) throw ConfigError("gen.calc_dots range inverted");
}

Subject make_subject(uint64_t seed, const GenConfig& cfg) {
  cfg.validate();
  Subject s;
  s.subject_id = static_cast<int>(static_cast<uint32_t>(seed >> 32));
  s.rng_seed = seed;
  Rng rng(mix_seed(seed, str_tag("subject")));

  // Lesion count from the configured categorical distribution.
  double u = rng.uniform();
  int count = cfg.max_lesions;
  double acc = 0;
  for (int k = 0; k <= cfg.max_lesions; ++k) {
    acc += cfg.lesion_count_probs[static_cast<size_t>(k)];
    if (u < acc) {
      count = k;
      break;
    }
  }

  for (int i = 0; i < count; ++i) {
    LatentLesion l;
    l.cls = rng.bernoulli(0.5) ? LesionClass::Mass : LesionClass::CalcCluster;
    l.cx = rng.uniform(cfg.center_margin, 1.0 - cfg.center_margin);
    l.cy = rng.uniform(cfg.center_margin, 1.0 - cfg.center_margin);
    l.radius = rng.uniform(cfg.radius_min, cfg.radius_max);
    l.intensity_delta = rng.uniform(cfg.delta_min, cfg.delta_max);
    s.lesions.push_back(l);
  }

  s.background.texture_freq = rng.uniform(cfg.texture_freq_min, cfg.texture_freq_max);
  s.background.base_intensity = rng.uniform(cfg.base_intensity_min, cfg.base_intensity_max);
  return s;
}

}  // namespace msvlab::synth
