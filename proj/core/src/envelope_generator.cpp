#include "cryopulse/envelope_generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "cryopulse/rng.hpp"

namespace cryopulse {

double DacTransferModel::transfer(int code) const {
    if (code < 0 || code > 255) {
        throw std::invalid_argument("DAC code must lie in [0, 255]");
    }
    if (mode == DacMode::ideal) {
        return static_cast<double>(code) / 255.0;
    }
    if (code == 0) {
        return 0.0;
    }
    const double x = static_cast<double>(code) / 255.0;
    const CounterRng rng(seed, 0);
    const double v = x - compression * x * x + inl_amplitude * rng.symmetric(static_cast<std::uint64_t>(code));
    return std::max(v, 0.0);
}

DacTransferModel make_dac_transfer(DacMode mode, double alpha, double beta, std::uint64_t seed) {
    if (alpha < 0.0 || beta < 0.0) {
        throw std::invalid_argument("DAC perturbation magnitudes must be non-negative");
    }
    DacTransferModel model;
    model.mode = mode;
    model.inl_amplitude = alpha;
    model.compression = beta;
    model.seed = seed;
    return model;
}

std::array<int, staircase_cycles> staircase_codes(std::span<const std::uint8_t> weights) {
    if (weights.size() != sub_dac_count) {
        throw std::invalid_argument("staircase needs exactly 11 sub-DAC weights");
    }
    std::array<int, staircase_cycles> codes{};
    int acc = 0;
    for (int c = 0; c <= 10; ++c) {
        acc += weights[static_cast<std::size_t>(c)];
        codes[static_cast<std::size_t>(c)] = acc;
        codes[static_cast<std::size_t>(21 - c)] = acc;
    }
    return codes;
}

RealTrace render_envelope(const ChannelCodes& channel, int code_p, const EnvelopeParams& params,
                          const DacTransferModel& dac) {
    if (code_p < 0 || code_p > code_p_max) {
        throw std::invalid_argument("code_p must lie in [0, 63]");
    }
    if (!(params.f_clk > 0.0)) {
        throw std::invalid_argument("f_clk must be positive");
    }
    const auto codes = staircase_codes(channel.weights);
    const double scale = params.full_scale * (static_cast<double>(code_p) / 63.0) *
                         dac.transfer(channel.code_n);
    RealTrace trace;
    trace.grid.sample_rate = params.f_clk;
    trace.grid.n_samples = staircase_cycles;
    trace.samples.resize(staircase_cycles);
    for (int c = 0; c < staircase_cycles; ++c) {
        trace.samples[static_cast<std::size_t>(c)] =
            scale * (static_cast<double>(codes[static_cast<std::size_t>(c)]) / max_staircase_sum);
    }
    return trace;
}

} // namespace cryopulse
