#pragma once

#include <array>
#include <span>

#include "cryopulse/waveform_memory.hpp"

namespace cryopulse {

enum class ShapeKind { raised_cosine, clipped_raised_cosine, gaussian, staircase, triangular };

// Analytic target envelopes from the stored-waveform catalog. clip_fraction
// applies to the clipped raised cosine; sigma_fraction is the Gaussian sigma
// as a fraction of the pulse duration (truncated at +/-3 sigma and shifted to
// zero at the ends).
struct PulseShape {
    ShapeKind kind = ShapeKind::raised_cosine;
    double clip_fraction = 0.9;
    double sigma_fraction = 1.0 / 6.0;
};

// Peak-normalized envelope value at normalized time u in [0,1] (peak at 0.5).
double shape_value(const PulseShape& shape, double u);

// Rising half-envelope E(s) on s in [0,11], normalized to E(0)=0, E(11)=1.
double shape_cumulative(const PulseShape& shape, double s);

// w_k = E(k+1) - E(k); sums to 1. Throws std::invalid_argument for invalid
// shape parameters or a decreasing half-envelope.
std::array<double, sub_dac_count> derivative_weights(const PulseShape& shape);

// Largest amplitude*|cos or sin| the I_N code can represent for these
// weights before saturating at 255 (equals sum(w)/(11 max(w))).
double amplitude_headroom(std::span<const double> weights);

// Scales weights so the largest maps to 255 (round half away from zero) and
// pushes amplitude and phase into the reference codes:
//   code_n_i = round(255 * amplitude * |cos phase| * rho), rho = 11 max(w)/sum(w),
// so the rendered peak equals full_scale*(code_p/63)*amplitude*|cos phase|
// in ideal mode to within one LSB. code_n saturates at 255 once
// amplitude*|cos or sin| exceeds the shape's headroom. Polarities take the
// signs of cos/sin.
WaveformInstruction quantize(std::span<const double> weights, double amplitude, double phase);

struct CompiledWaveform {
    WaveformInstruction instruction;
    // Max absolute deviation between the ideal-DAC rendering of the quantized
    // instruction and the unquantized target staircase, in units of
    // full_scale*(code_p/63), over both channels.
    double residual = 0.0;
};

CompiledWaveform compile(const PulseShape& shape, double amplitude, double phase);

} // namespace cryopulse
