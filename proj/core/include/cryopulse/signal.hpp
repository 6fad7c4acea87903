#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <vector>

namespace cryopulse {

// Uniform sampling grid. Sample i sits at t0 + i / sample_rate.
struct TimeGrid {
    double sample_rate = 1.0; // samples per second
    std::size_t n_samples = 0;
    double t0 = 0.0; // seconds

    double time_at(std::size_t i) const {
        return t0 + static_cast<double>(i) / sample_rate;
    }
    double duration() const { return static_cast<double>(n_samples) / sample_rate; }
};

bool same_grid(const TimeGrid& a, const TimeGrid& b);

// n_samples = ceil(duration * sample_rate); products within 1e-9 relative of
// an integer snap to it first so that exact durations do not gain a sample
// from floating-point dust.
TimeGrid make_time_grid(double sample_rate, double duration);

struct RealTrace {
    TimeGrid grid;
    std::vector<double> samples;
};

struct IQTrace {
    TimeGrid grid;
    std::vector<double> i_samples;
    std::vector<double> q_samples;
};

// Single-tone probe: (2/N) * sum_i x[i] * exp(-j 2 pi f t_i). For a pure tone
// spanning an integer number of periods the magnitude equals the carrier
// amplitude; the 2/N normalization is what the CSV headers document.
std::complex<double> tone_amplitude(const RealTrace& trace, double frequency);

// Rectangle rule, sum(samples) / sample_rate, with compensated summation.
// Exactly this rule so staircase areas match (sum of codes) / f_clk.
double integrate_envelope(const RealTrace& trace);

// Appends b after a (grids must share the sample rate).
RealTrace concat(const RealTrace& a, const RealTrace& b);

// CSV interchange: "# sample_rate=<Hz>" header, one sample per line
// (i,q columns for IQ), 12 significant digits.
void write_trace_csv(const RealTrace& trace, const std::filesystem::path& path);
void write_trace_csv(const IQTrace& trace, const std::filesystem::path& path);
RealTrace read_trace_csv(const std::filesystem::path& path);
IQTrace read_iq_trace_csv(const std::filesystem::path& path);

// Formats a double with 12 significant digits (the CSV contract).
std::string format_sample(double v);

} // namespace cryopulse
