#include "cryopulse/signal.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cryopulse/io.hpp"

namespace cryopulse {

namespace {

// Neumaier compensated sum: the result is the correctly rounded total for the
// trace lengths used here, which is what makes concatenation split exactly.
double compensated_sum(const std::vector<double>& xs) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : xs) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

} // namespace

bool same_grid(const TimeGrid& a, const TimeGrid& b) {
    return a.sample_rate == b.sample_rate && a.n_samples == b.n_samples && a.t0 == b.t0;
}

TimeGrid make_time_grid(double sample_rate, double duration) {
    if (!(sample_rate > 0.0)) {
        throw std::invalid_argument("make_time_grid: sample_rate must be positive");
    }
    if (!(duration > 0.0)) {
        throw std::invalid_argument("make_time_grid: duration must be positive");
    }
    double x = sample_rate * duration;
    double nearest = std::round(x);
    double n = (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) ? nearest : std::ceil(x);
    TimeGrid grid;
    grid.sample_rate = sample_rate;
    grid.n_samples = static_cast<std::size_t>(n);
    grid.t0 = 0.0;
    if (grid.n_samples == 0) {
        grid.n_samples = 1;
    }
    return grid;
}

std::complex<double> tone_amplitude(const RealTrace& trace, double frequency) {
    if (trace.samples.empty()) {
        throw std::invalid_argument("tone_amplitude: empty trace");
    }
    if (trace.samples.size() != trace.grid.n_samples) {
        throw std::invalid_argument("tone_amplitude: sample count does not match grid");
    }
    if (frequency < 0.0 || frequency >= 0.5 * trace.grid.sample_rate) {
        throw std::invalid_argument("tone_amplitude: frequency must lie in [0, Nyquist)");
    }
    const double w = 2.0 * M_PI * frequency;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const double phase = w * trace.grid.time_at(i);
        re += trace.samples[i] * std::cos(phase);
        im -= trace.samples[i] * std::sin(phase);
    }
    const double scale = 2.0 / static_cast<double>(trace.samples.size());
    return {scale * re, scale * im};
}

double integrate_envelope(const RealTrace& trace) {
    if (trace.samples.empty()) {
        throw std::invalid_argument("integrate_envelope: empty trace");
    }
    return compensated_sum(trace.samples) / trace.grid.sample_rate;
}

RealTrace concat(const RealTrace& a, const RealTrace& b) {
    if (a.grid.sample_rate != b.grid.sample_rate) {
        throw std::invalid_argument("concat: sample rates differ");
    }
    RealTrace out;
    out.grid = a.grid;
    out.grid.n_samples = a.grid.n_samples + b.grid.n_samples;
    out.samples = a.samples;
    out.samples.insert(out.samples.end(), b.samples.begin(), b.samples.end());
    return out;
}

std::string format_sample(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string csv_header(const TimeGrid& grid) {
    return "# sample_rate=" + format_sample(grid.sample_rate) + "\n";
}

TimeGrid parse_csv_header(std::istringstream& in, std::size_t n_samples) {
    std::string header;
    std::getline(in, header);
    const std::string prefix = "# sample_rate=";
    if (header.rfind(prefix, 0) != 0) {
        throw std::runtime_error("trace CSV: missing sample_rate header");
    }
    TimeGrid grid;
    grid.sample_rate = std::stod(header.substr(prefix.size()));
    grid.n_samples = n_samples;
    return grid;
}

} // namespace

void write_trace_csv(const RealTrace& trace, const std::filesystem::path& path) {
    std::string out = csv_header(trace.grid);
    for (double v : trace.samples) {
        out += format_sample(v);
        out += '\n';
    }
    write_file_atomic(path, out);
}

void write_trace_csv(const IQTrace& trace, const std::filesystem::path& path) {
    std::string out = csv_header(trace.grid);
    for (std::size_t i = 0; i < trace.i_samples.size(); ++i) {
        out += format_sample(trace.i_samples[i]);
        out += ',';
        out += format_sample(trace.q_samples[i]);
        out += '\n';
    }
    write_file_atomic(path, out);
}

RealTrace read_trace_csv(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    RealTrace trace;
    trace.grid = parse_csv_header(in, 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        trace.samples.push_back(std::stod(line));
    }
    trace.grid.n_samples = trace.samples.size();
    return trace;
}

IQTrace read_iq_trace_csv(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    IQTrace trace;
    trace.grid = parse_csv_header(in, 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("IQ trace CSV: expected two columns");
        }
        trace.i_samples.push_back(std::stod(line.substr(0, comma)));
        trace.q_samples.push_back(std::stod(line.substr(comma + 1)));
    }
    trace.grid.n_samples = trace.i_samples.size();
    return trace;
}

} // namespace cryopulse
