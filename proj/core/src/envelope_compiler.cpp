#include "cryopulse/envelope_compiler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cryopulse/envelope_generator.hpp"

namespace cryopulse {

namespace {

void validate_shape(const PulseShape& shape) {
    if (shape.kind == ShapeKind::clipped_raised_cosine &&
        !(shape.clip_fraction > 0.0 && shape.clip_fraction <= 1.0)) {
        throw std::invalid_argument("clip fraction must lie in (0, 1]");
    }
    if (shape.kind == ShapeKind::gaussian && !(shape.sigma_fraction > 0.0)) {
        throw std::invalid_argument("gaussian sigma fraction must be positive");
    }
}

double raised_cosine(double s) { return 0.5 * (1.0 - std::cos(M_PI * s / 11.0)); }

} // namespace

double shape_cumulative(const PulseShape& shape, double s) {
    validate_shape(shape);
    s = std::clamp(s, 0.0, 11.0);
    switch (shape.kind) {
    case ShapeKind::raised_cosine:
        return raised_cosine(s);
    case ShapeKind::clipped_raised_cosine:
        return std::min(raised_cosine(s), shape.clip_fraction) / shape.clip_fraction;
    case ShapeKind::gaussian: {
        const double sigma = 22.0 * shape.sigma_fraction;
        const double g = std::exp(-(s - 11.0) * (s - 11.0) / (2.0 * sigma * sigma));
        const double g0 = std::exp(-121.0 / (2.0 * sigma * sigma));
        return (g - g0) / (1.0 - g0);
    }
    case ShapeKind::staircase:
        // Full current from the first enabled cycle: a flat-top pulse.
        return s > 0.0 ? 1.0 : 0.0;
    case ShapeKind::triangular:
        return s / 11.0;
    }
    throw std::invalid_argument("unknown shape kind");
}

double shape_value(const PulseShape& shape, double u) {
    if (u <= 0.0 || u >= 1.0) {
        return 0.0;
    }
    const double s = 22.0 * std::min(u, 1.0 - u);
    return shape_cumulative(shape, s);
}

std::array<double, sub_dac_count> derivative_weights(const PulseShape& shape) {
    std::array<double, sub_dac_count> weights{};
    double prev = shape_cumulative(shape, 0.0);
    for (std::size_t k = 0; k < sub_dac_count; ++k) {
        const double next = shape_cumulative(shape, static_cast<double>(k + 1));
        double w = next - prev;
        if (w < 0.0) {
            if (w < -1e-12) {
                throw std::invalid_argument("half-envelope must be non-decreasing");
            }
            w = 0.0;
        }
        weights[k] = w;
        prev = next;
    }
    return weights;
}

double amplitude_headroom(std::span<const double> weights) {
    if (weights.size() != sub_dac_count) {
        throw std::invalid_argument("expected 11 weights");
    }
    const double max_w = *std::max_element(weights.begin(), weights.end());
    if (!(max_w > 0.0)) {
        throw std::invalid_argument("weights must not be all zero");
    }
    double sum = 0.0;
    for (double w : weights) {
        sum += w;
    }
    return sum / (11.0 * max_w);
}

WaveformInstruction quantize(std::span<const double> weights, double amplitude, double phase) {
    if (weights.size() != sub_dac_count) {
        throw std::invalid_argument("expected 11 weights");
    }
    if (!(amplitude >= 0.0 && amplitude <= 1.0)) {
        throw std::invalid_argument("amplitude must lie in [0, 1]");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w)) {
            throw std::invalid_argument("weights must be finite and non-negative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
        throw std::invalid_argument("weights must be normalized to unit sum");
    }
    const double max_w = *std::max_element(weights.begin(), weights.end());

    WaveformInstruction instr;
    for (std::size_t k = 0; k < sub_dac_count; ++k) {
        const double scaled = std::round(255.0 * weights[k] / max_w);
        instr.weights_i[k] = static_cast<std::uint8_t>(scaled);
        instr.weights_q[k] = instr.weights_i[k];
    }

    const double rho = 11.0 * max_w / sum;
    const double ci = std::cos(phase);
    const double cq = std::sin(phase);
    const auto ref_code = [&](double projection) {
        const double code = std::round(255.0 * amplitude * std::abs(projection) * rho);
        return static_cast<std::uint8_t>(std::clamp(code, 0.0, 255.0));
    };
    instr.code_n_i = ref_code(ci);
    instr.code_n_q = ref_code(cq);
    instr.pol_i = ci >= 0.0 ? +1 : -1;
    instr.pol_q = cq >= 0.0 ? +1 : -1;
    return instr;
}

CompiledWaveform compile(const PulseShape& shape, double amplitude, double phase) {
    const auto weights = derivative_weights(shape);
    CompiledWaveform out;
    out.instruction = quantize(weights, amplitude, phase);

    // Residual against the unquantized staircase, telescoped through E so an
    // exactly representable shape reports exactly zero.
    const auto quantized = staircase_codes(out.instruction.weights_i);
    const double gains[2] = {std::abs(std::cos(phase)), std::abs(std::sin(phase))};
    const std::uint8_t codes[2] = {out.instruction.code_n_i, out.instruction.code_n_q};
    double residual = 0.0;
    for (int ch = 0; ch < 2; ++ch) {
        const double code_scale = static_cast<double>(codes[ch]) / 255.0;
        for (int c = 0; c < staircase_cycles; ++c) {
            const int m = std::min(c, 21 - c);
            const double target =
                amplitude * gains[ch] * shape_cumulative(shape, static_cast<double>(m + 1));
            const double actual =
                code_scale *
                (static_cast<double>(quantized[static_cast<std::size_t>(c)]) / max_staircase_sum);
            residual = std::max(residual, std::abs(actual - target));
        }
    }
    out.residual = residual;
    return out;
}

} // namespace cryopulse
