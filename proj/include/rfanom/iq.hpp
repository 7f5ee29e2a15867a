#ifndef RFANOM_IQ_HPP
#define RFANOM_IQ_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <vector>

namespace rfanom {

using cplx = std::complex<double>;

/// Predictor geometry shared by every module: 32 input samples, 4 predicted.
inline constexpr std::size_t kInputLen = 32;
inline constexpr std::size_t kPredLen = 4;
inline constexpr std::size_t kWindowLen = kInputLen + kPredLen;

/// Contiguous complex baseband signal. Frequencies elsewhere in the library
/// are fractions of the sample rate, so the default rate of 1.0 is the
/// normalized convention used throughout.
struct IQBuffer {
  std::vector<cplx> samples;
  double sample_rate_hz = 1.0;

  IQBuffer() = default;
  explicit IQBuffer(std::vector<cplx> s, double fs = 1.0)
      : samples(std::move(s)), sample_rate_hz(fs) {}
  explicit IQBuffer(std::size_t n, double fs = 1.0) : samples(n), sample_rate_hz(fs) {}

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  cplx& operator[](std::size_t i) { return samples[i]; }
  const cplx& operator[](std::size_t i) const { return samples[i]; }
};

/// True when every component of every sample is finite.
bool all_finite(const IQBuffer& buf);

/// (1/M) * sum(re^2 + im^2). Throws std::invalid_argument("empty signal")
/// on an empty buffer.
double mean_power(const IQBuffer& buf);
double mean_power(std::span<const cplx> samples);

/// One training/evaluation example: 32 inputs followed immediately by the
/// 4 samples to predict, both copied out of the source buffer.
struct WindowPair {
  std::array<cplx, kInputLen> input;
  std::array<cplx, kPredLen> target;
  std::size_t start = 0;
};

/// Windows at starts 0, stride, 2*stride, ... while start + 36 <= buf.size().
/// Short buffers yield an empty vector.
std::vector<WindowPair> slice_windows(const IQBuffer& buf, std::size_t stride);

/// Number of windows slice_windows would produce.
std::size_t window_count(std::size_t buf_len, std::size_t stride);

/// Deterministic SplitMix64 generator. The same seed produces the same
/// stream on every platform; distributions are implemented here rather
/// than taken from <random> for exactly that reason. Instances are cheap
/// to copy and must not be shared across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random mantissa bits.
  double uniform();
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via Box-Muller; draws two uniforms every other call.
  double normal();

  /// Complex value with independent N(0,1) real and imaginary parts.
  cplx cnormal();

  /// Derives a child seed from a seed and a path of indices. Used for the
  /// documented counter scheme behind per-trial experiment seeds:
  /// each path element is mixed in with one SplitMix64 round.
  static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// Interleaved (re, im) IEEE-754 32-bit little-endian floats. Samples are
/// narrowed from double on write and promoted exactly on read.
IQBuffer read_cf32(const std::filesystem::path& path);
void write_cf32(const IQBuffer& buf, const std::filesystem::path& path);

}  // namespace rfanom

#endif
