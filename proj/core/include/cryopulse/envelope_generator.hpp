#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "cryopulse/signal.hpp"
#include "cryopulse/waveform_memory.hpp"

namespace cryopulse {

inline constexpr int staircase_cycles = 22;
// 11 sub-DACs x 255 full-scale weight; normalizes the staircase peak.
inline constexpr int max_staircase_sum = 2805;

enum class DacMode { ideal, cryo_perturbed };

// code -> normalized current. Ideal: code/255. Cryo-perturbed adds quadratic
// compression and per-code INL drawn deterministically from the seed:
//   transfer(c) = max(0, x - beta x^2 + alpha u(c)),  x = c/255, u in [-1,1],
// with transfer(0) forced to 0. Reproduces the reported 3 K pathologies
// (non-linear and non-monotonic) without a device model.
struct DacTransferModel {
    DacMode mode = DacMode::ideal;
    double inl_amplitude = 0.05; // alpha
    double compression = 0.1;    // beta
    std::uint64_t seed = 11;

    double transfer(int code) const;
};

DacTransferModel make_dac_transfer(DacMode mode, double alpha, double beta, std::uint64_t seed);

struct EnvelopeParams {
    double f_clk = 1e9;      // state-machine clock, Hz
    double full_scale = 1.0; // volts at the modulator baseband node
};
// Supported clock range; outside it configs warn but still run.
inline constexpr double f_clk_supported_min = 0.5e9;
inline constexpr double f_clk_supported_max = 3e9;

// The enable/disable state machine: sub-DAC k turns on at cycle k and off at
// cycle 22-k, so E[c] = sum of weights[0..min(c, 21-c)]. Symmetric by
// construction with a two-cycle peak plateau.
std::array<int, staircase_cycles> staircase_codes(std::span<const std::uint8_t> weights);

// One channel of an instruction: its sub-DAC weights and I_N code.
struct ChannelCodes {
    std::array<std::uint8_t, sub_dac_count> weights{};
    std::uint8_t code_n = 0;
};

// 22 samples at f_clk (one per cycle):
//   sample[c] = full_scale * (code_p/63) * transfer(code_n) * E[c]/2805.
// The DAC model applies to the I_N code; the I_P reference is ideal.
RealTrace render_envelope(const ChannelCodes& channel, int code_p, const EnvelopeParams& params,
                          const DacTransferModel& dac);

} // namespace cryopulse
