#pragma once

#include <array>

#include "cryopulse/signal.hpp"

namespace cryopulse {

// Upconversion chain settings. The transformer/amplifier chain is modeled as
// unity gain; configs warn when f_lo leaves the 4-8 GHz coupling band.
struct ModulatorConfig {
    double f_lo = 5.6e9;          // Hz
    double rf_sample_rate = 88e9; // Hz; must exceed 2*f_lo, keep >= 8x for the tone probe
    double filter_cutoff = 500e6; // Hz, single-pole baseband filter
    double leak_amplitude = 1e-3; // volts of carrier feedthrough (0.1% of default full scale)
    double leak_phase = 0.7;      // radians
    std::array<double, 2> band{4e9, 8e9};
};

// Off-chip cancellation knobs: AT1 attenuator code (amplitude =
// leak_ref*(1 - at1/63)) and PH1 phase code (phase = 2 pi ph1/256).
struct CancelSetting {
    int at1 = 63; // [0, 63]; 63 adds nothing
    int ph1 = 0;  // [0, 255]
};

// Single-pole low-pass, bilinear discretization:
//   y[n] = a (x[n] + x[n-1]) + b y[n-1],
//   a = w/(w + 2 fs), b = (2 fs - w)/(2 fs + w), w = 2 pi cutoff.
// DC gain is exactly 1.
RealTrace baseband_filter(const RealTrace& trace, double cutoff);

// Holds each baseband sample for the corresponding span of the RF grid
// (a current-steering DAC's held output), optionally appending pad_seconds of
// zeros for filter tails. Both channels must share a grid.
IQTrace zero_order_hold(const RealTrace& i_channel, const RealTrace& q_channel,
                        double rf_sample_rate, double pad_seconds = 0.0);
RealTrace zero_order_hold(const RealTrace& channel, double rf_sample_rate,
                          double pad_seconds = 0.0);

// s(t) = pol_i I(t) cos(2 pi f_lo t) - pol_q Q(t) sin(2 pi f_lo t)
//        + leak_amplitude cos(2 pi f_lo t + leak_phase).
// The tone probe then reads pol_i*I_pk + j pol_q*Q_pk, i.e. carrier phase
// atan2(pol_q Q_pk, pol_i I_pk).
RealTrace upconvert(const IQTrace& baseband, int pol_i, int pol_q, const ModulatorConfig& cfg);

// Adds the cancellation tone leak_ref*(1 - at1/63)*cos(2 pi f_lo t + 2 pi ph1/256).
RealTrace offchip_cancel(const RealTrace& rf, const CancelSetting& setting, double leak_ref,
                         const ModulatorConfig& cfg);

} // namespace cryopulse
