#include "cryopulse/vector_modulator.hpp"

#include <cmath>
#include <stdexcept>

namespace cryopulse {

namespace {

std::vector<double> filter_channel(const std::vector<double>& x, double a, double b) {
    std::vector<double> y(x.size());
    double x_prev = 0.0;
    double y_prev = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
        y[n] = a * (x[n] + x_prev) + b * y_prev;
        x_prev = x[n];
        y_prev = y[n];
    }
    return y;
}

std::vector<double> hold_channel(const std::vector<double>& x, double src_rate, double dst_rate,
                                 std::size_t n_out) {
    std::vector<double> y(n_out, 0.0);
    for (std::size_t n = 0; n < n_out; ++n) {
        const double t = static_cast<double>(n) / dst_rate;
        // Nudge by 1e-9 samples so exact step boundaries do not fall to the
        // previous hold interval through floating-point dust.
        const auto idx = static_cast<std::size_t>(t * src_rate + 1e-9);
        if (idx < x.size()) {
            y[n] = x[idx];
        }
    }
    return y;
}

std::size_t held_sample_count(const TimeGrid& src, double rf_sample_rate, double pad_seconds) {
    if (!(rf_sample_rate > 0.0)) {
        throw std::invalid_argument("zero_order_hold: RF sample rate must be positive");
    }
    if (pad_seconds < 0.0) {
        throw std::invalid_argument("zero_order_hold: pad must be non-negative");
    }
    const double duration = src.duration() + pad_seconds;
    return make_time_grid(rf_sample_rate, duration).n_samples;
}

} // namespace

RealTrace baseband_filter(const RealTrace& trace, double cutoff) {
    if (!(cutoff > 0.0) || cutoff >= 0.5 * trace.grid.sample_rate) {
        throw std::invalid_argument("baseband_filter: cutoff must lie in (0, Nyquist)");
    }
    const double w = 2.0 * M_PI * cutoff;
    const double fs2 = 2.0 * trace.grid.sample_rate;
    const double a = w / (w + fs2);
    const double b = (fs2 - w) / (fs2 + w);
    RealTrace out;
    out.grid = trace.grid;
    out.samples = filter_channel(trace.samples, a, b);
    return out;
}

IQTrace zero_order_hold(const RealTrace& i_channel, const RealTrace& q_channel,
                        double rf_sample_rate, double pad_seconds) {
    if (!same_grid(i_channel.grid, q_channel.grid)) {
        throw std::invalid_argument("zero_order_hold: I and Q grids differ");
    }
    const std::size_t n = held_sample_count(i_channel.grid, rf_sample_rate, pad_seconds);
    IQTrace out;
    out.grid.sample_rate = rf_sample_rate;
    out.grid.n_samples = n;
    out.i_samples = hold_channel(i_channel.samples, i_channel.grid.sample_rate, rf_sample_rate, n);
    out.q_samples = hold_channel(q_channel.samples, q_channel.grid.sample_rate, rf_sample_rate, n);
    return out;
}

RealTrace zero_order_hold(const RealTrace& channel, double rf_sample_rate, double pad_seconds) {
    const std::size_t n = held_sample_count(channel.grid, rf_sample_rate, pad_seconds);
    RealTrace out;
    out.grid.sample_rate = rf_sample_rate;
    out.grid.n_samples = n;
    out.samples = hold_channel(channel.samples, channel.grid.sample_rate, rf_sample_rate, n);
    return out;
}

RealTrace upconvert(const IQTrace& baseband, int pol_i, int pol_q, const ModulatorConfig& cfg) {
    if ((pol_i != 1 && pol_i != -1) || (pol_q != 1 && pol_q != -1)) {
        throw std::invalid_argument("upconvert: polarity must be +1 or -1");
    }
    if (std::abs(baseband.grid.sample_rate - cfg.rf_sample_rate) >
        1e-9 * cfg.rf_sample_rate) {
        throw std::invalid_argument("upconvert: baseband grid does not match the RF sample rate");
    }
    if (baseband.i_samples.size() != baseband.grid.n_samples ||
        baseband.q_samples.size() != baseband.grid.n_samples) {
        throw std::invalid_argument("upconvert: sample counts do not match the grid");
    }
    if (!(cfg.rf_sample_rate > 2.0 * cfg.f_lo)) {
        throw std::invalid_argument("upconvert: RF sample rate below Nyquist for f_lo");
    }
    const double w = 2.0 * M_PI * cfg.f_lo;
    RealTrace out;
    out.grid = baseband.grid;
    out.samples.resize(baseband.grid.n_samples);
    for (std::size_t n = 0; n < out.samples.size(); ++n) {
        const double t = baseband.grid.time_at(n);
        out.samples[n] = pol_i * baseband.i_samples[n] * std::cos(w * t) -
                         pol_q * baseband.q_samples[n] * std::sin(w * t) +
                         cfg.leak_amplitude * std::cos(w * t + cfg.leak_phase);
    }
    return out;
}

RealTrace offchip_cancel(const RealTrace& rf, const CancelSetting& setting, double leak_ref,
                         const ModulatorConfig& cfg) {
    if (setting.at1 < 0 || setting.at1 > 63 || setting.ph1 < 0 || setting.ph1 > 255) {
        throw std::invalid_argument("cancel setting out of range (at1 in [0,63], ph1 in [0,255])");
    }
    const double amplitude = leak_ref * (1.0 - static_cast<double>(setting.at1) / 63.0);
    const double phase = 2.0 * M_PI * static_cast<double>(setting.ph1) / 256.0;
    const double w = 2.0 * M_PI * cfg.f_lo;
    RealTrace out = rf;
    for (std::size_t n = 0; n < out.samples.size(); ++n) {
        const double t = out.grid.time_at(n);
        out.samples[n] += amplitude * std::cos(w * t + phase);
    }
    return out;
}

} // namespace cryopulse
