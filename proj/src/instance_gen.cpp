#include "rtac/instance_gen.hpp"

#include <vector>

namespace rtac {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

void GenConfig::validate() const {
  if (n < 1) throw UsageError("generator: n must be at least 1");
  if (d < 1) throw UsageError("generator: d must be at least 1");
  if (!(density >= 0.0 && density <= 1.0)) throw UsageError("generator: density must lie in [0, 1]");
  if (!(tightness >= 0.0 && tightness <= 1.0)) throw UsageError("generator: tightness must lie in [0, 1]");
}

CspInstance generate(const GenConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  std::vector<Constraint> constraints;
  for (std::size_t x = 0; x < cfg.n; ++x) {
    for (std::size_t y = x + 1; y < cfg.n; ++y) {
      if (!(rng.unit() < cfg.density)) continue;
      Constraint c{x, y, {}};
      for (std::size_t a = 0; a < cfg.d; ++a) {
        for (std::size_t b = 0; b < cfg.d; ++b) {
          if (!(rng.unit() < cfg.tightness)) c.allowed.push_back({a, b});
        }
      }
      constraints.push_back(std::move(c));
    }
  }
  return CspInstance(cfg.n, cfg.d, std::move(constraints));
}

}  // namespace rtac
