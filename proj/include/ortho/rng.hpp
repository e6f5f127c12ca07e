#ifndef ORTHO_RNG_HPP
#define ORTHO_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ortho {

/// Philox2x64-10 counter-based stream. The key is the 64-bit seed and the
/// counter is (block, stream_index), so stream i of a given seed is fully
/// determined by (seed, i): ensemble runs derive one stream per path and the
/// results do not depend on how paths are distributed over workers.
class RngStream {
 public:
  RngStream() = default;
  RngStream(std::uint64_t seed, std::uint64_t stream_index)
      : key_(seed), stream_(stream_index) {}

  std::uint64_t next_u64() {
    if (sub_ == 2) {
      generate();
      sub_ = 0;
    }
    return out_[sub_++];
  }

  /// Uniform on [0,1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0,1]; safe as the argument of log.
  double next_double_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Exponential waiting time by inverse CDF, -ln(1-u)/rate. A zero rate
  /// yields +infinity (the clock never rings).
  double next_exponential(double rate) {
    return -std::log1p(-next_double_pos()) / rate;
  }

 private:
  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(prod >> 64);
    lo = static_cast<std::uint64_t>(prod);
  }

  void generate() {
    std::uint64_t x0 = block_;
    std::uint64_t x1 = stream_;
    std::uint64_t k = key_;
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi, lo;
      mulhilo(0xD2B74407B1CE6E93ULL, x0, hi, lo);
      x0 = hi ^ k ^ x1;
      x1 = lo;
      k += 0x9E3779B97F4A7C15ULL;
    }
    out_[0] = x0;
    out_[1] = x1;
    ++block_;
  }

  std::uint64_t key_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::uint64_t out_[2] = {0, 0};
  int sub_ = 2;
};

}  // namespace ortho

#endif  // ORTHO_RNG_HPP
