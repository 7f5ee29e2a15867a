#include "rfanom/iq.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>

static_assert(std::endian::native == std::endian::little,
              "cf32 I/O assumes a little-endian host");
static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559,
              "cf32 I/O requires IEEE-754 binary32");

namespace rfanom {

bool all_finite(const IQBuffer& buf) {
  for (const cplx& s : buf.samples) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
  }
  return true;
}

double mean_power(std::span<const cplx> samples) {
  if (samples.empty()) throw std::invalid_argument("empty signal");
  double acc = 0.0;
  for (const cplx& s : samples) acc += s.real() * s.real() + s.imag() * s.imag();
  return acc / static_cast<double>(samples.size());
}

double mean_power(const IQBuffer& buf) { return mean_power(std::span<const cplx>(buf.samples)); }

std::size_t window_count(std::size_t buf_len, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("stride must be >= 1");
  if (buf_len < kWindowLen) return 0;
  return (buf_len - kWindowLen) / stride + 1;
}

std::vector<WindowPair> slice_windows(const IQBuffer& buf, std::size_t stride) {
  const std::size_t n = window_count(buf.size(), stride);
  std::vector<WindowPair> out(n);
  for (std::size_t w = 0; w < n; ++w) {
    WindowPair& p = out[w];
    p.start = w * stride;
    for (std::size_t i = 0; i < kInputLen; ++i) p.input[i] = buf[p.start + i];
    for (std::size_t i = 0; i < kPredLen; ++i) p.target[i] = buf[p.start + kInputLen + i];
  }
  return out;
}

std::uint64_t Rng::next_u64() {
  // SplitMix64 (Steele, Lea, Flood 2014).
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  // Rejection keeps the result exactly uniform.
  const std::uint64_t limit = n * ((~0ULL) / n);
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return v % n;
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

cplx Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::uint64_t Rng::derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  Rng r(seed);
  std::uint64_t s = r.next_u64();
  for (std::uint64_t p : path) {
    Rng step(s ^ (p + 0x9e3779b97f4a7c15ULL));
    s = step.next_u64();
  }
  return s;
}

IQBuffer read_cf32(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  in.seekg(0, std::ios::end);
  const std::streamoff bytes = in.tellg();
  in.seekg(0, std::ios::beg);
  if (bytes < 0) throw std::runtime_error("cannot read " + path.string());
  if (bytes % 8 != 0) throw std::runtime_error("malformed cf32");
  const std::size_t n = static_cast<std::size_t>(bytes) / 8;
  std::vector<float> raw(2 * n);
  if (n > 0) {
    in.read(reinterpret_cast<char*>(raw.data()), bytes);
    if (!in) throw std::runtime_error("malformed cf32");
  }
  IQBuffer buf(n);
  for (std::size_t i = 0; i < n; ++i) {
    buf[i] = cplx(static_cast<double>(raw[2 * i]), static_cast<double>(raw[2 * i + 1]));
  }
  return buf;
}

void write_cf32(const IQBuffer& buf, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  std::vector<float> raw(2 * buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) {
    raw[2 * i] = static_cast<float>(buf[i].real());
    raw[2 * i + 1] = static_cast<float>(buf[i].imag());
  }
  if (!raw.empty()) {
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size() * sizeof(float)));
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace rfanom
