#pragma once

#include <array>
#include <cstdint>

namespace uavsec {

// philox4x32-10 block function. Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) noexcept;

/// Counter-based random stream. Every output is a pure function of
/// (seed, stream_id, draw index), so workers that partition the draw-index
/// space reproduce a serial run exactly, on any platform.
///
/// Monte Carlo code gives each trial a disjoint index range via at_trial();
/// a trial may consume up to kDrawsPerTrial 64-bit draws.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1).
  double next_uniform();

  /// Exponential variate with the given mean (> 0).
  double next_exponential(double mean);

  /// Same stream repositioned at the start of trial i's draw budget.
  RandomStream at_trial(std::uint64_t trial_index) const noexcept;

  static constexpr std::uint64_t kDrawsPerTrial = std::uint64_t{1} << 18;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t draw_index_ = 0;
};

}  // namespace uavsec
