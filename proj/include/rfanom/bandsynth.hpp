#ifndef RFANOM_BANDSYNTH_HPP
#define RFANOM_BANDSYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rfanom/iq.hpp"

namespace rfanom {

/// The four synthetic band environments, ordered roughly from most to
/// least predictable: smooth analog FM carriers, slotted TDMA bursts,
/// a blocky OFDMA resource grid, and random CSMA/frequency-hopping
/// traffic.
enum class BandKind { FmLike, TdmaLike, OfdmaLike, IsmLike };

std::string to_string(BandKind kind);
BandKind band_kind_from_string(const std::string& name);

struct BandConfig {
  BandKind kind = BandKind::FmLike;
  std::size_t num_samples = 100000;
  /// Carriers for FmLike/TdmaLike, subcarriers for OfdmaLike, traffic
  /// density multiplier for IsmLike.
  int num_carriers = 3;
  /// White-noise power relative to the unit-power band, in dB (<= 0).
  double noise_floor_db = -30.0;
  std::uint64_t seed = 1;
};

/// Carrier count a band kind gets when the caller does not choose one.
int default_num_carriers(BandKind kind);

/// Deterministic center frequencies (fractions of Fs) for each emitter of
/// FmLike and TdmaLike bands, and for OfdmaLike subcarriers. Exposed so
/// spectral checks can look in the right places. Empty for IsmLike, whose
/// carriers are drawn at random.
std::vector<double> carrier_freqs(BandKind kind, int num_carriers);

/// TDMA slot grid: fixed frames of kTdmaNumSlots slots, carrier i owning
/// slot (i mod kTdmaNumSlots) in every frame. Burst amplitude ramps live
/// inside the slot so off-slot regions carry only the noise floor.
inline constexpr std::size_t kTdmaNumSlots = 8;
inline constexpr std::size_t kTdmaSlotLen = 1250;
inline constexpr std::size_t kTdmaRampLen = 32;

/// OFDMA resource grid geometry.
inline constexpr std::size_t kOfdmaSlotLen = 512;
inline constexpr std::size_t kOfdmaSymbolLen = 64;

/// Synthesizes one band. Pure function of the config: the same config
/// always yields the same buffer, with mean power normalized to 1.0.
/// Throws std::invalid_argument on out-of-range config values
/// (num_samples < 1000, num_carriers < 1, noise_floor_db > 0).
IQBuffer gen_band(const BandConfig& cfg);

}  // namespace rfanom

#endif
