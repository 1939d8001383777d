#include "uavsec/random.hpp"

#include <cmath>

namespace uavsec {

namespace {

constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;

inline void round_once(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) noexcept {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) noexcept {
  std::array<std::uint32_t, 4> c = counter;
  std::array<std::uint32_t, 2> k = key;
  round_once(c, k);
  for (int r = 1; r < 10; ++r) {
    k[0] += kWeyl0;
    k[1] += kWeyl1;
    round_once(c, k);
  }
  return c;
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t idx = draw_index_++;
  const std::uint64_t block_index = idx >> 1;
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(block_index),
      static_cast<std::uint32_t>(block_index >> 32),
      static_cast<std::uint32_t>(stream_id_),
      static_cast<std::uint32_t>(stream_id_ >> 32),
  };
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed_),
      static_cast<std::uint32_t>(seed_ >> 32),
  };
  const std::array<std::uint32_t, 4> out = philox4x32(counter, key);
  const int half = static_cast<int>(idx & 1) * 2;
  return static_cast<std::uint64_t>(out[half]) | (static_cast<std::uint64_t>(out[half + 1]) << 32);
}

double RandomStream::next_uniform() {
  // 53 random bits, offset by half an ulp so 0 and 1 are excluded.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::next_exponential(double mean) {
  return -mean * std::log(next_uniform());
}

RandomStream RandomStream::at_trial(std::uint64_t trial_index) const noexcept {
  RandomStream s(seed_, stream_id_);
  s.draw_index_ = trial_index * kDrawsPerTrial;
  return s;
}

}  // namespace uavsec
