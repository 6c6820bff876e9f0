#pragma once

#include <cstdint>
#include <string_view>

#include "rtac/csp.hpp"

namespace rtac {

/// SplitMix64: state += 0x9e3779b97f4a7c15, then the standard xor-shift
/// multiply finalizer. Unit draws use the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, 1).
  double unit();

 private:
  std::uint64_t state_;
};

inline constexpr std::string_view kPrngName = "splitmix64";

struct GenConfig {
  std::size_t n = 1;
  std::size_t d = 20;
  double density = 0.25;
  /// Probability that a value pair is forbidden.
  double tightness = 0.3;
  std::uint64_t seed = 0;

  /// Throws UsageError when a field is out of range.
  void validate() const;

  bool operator==(const GenConfig&) const = default;
};

/// Random binary CSP. One draw per variable pair in ascending (x, y) order
/// decides whether the pair is constrained (draw < density); then, for each
/// constrained pair, one draw per value pair in row-major order decides
/// whether it is forbidden (draw < tightness). Empty relations are kept.
CspInstance generate(const GenConfig& cfg);

}  // namespace rtac
