#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <span>
#include <vector>

#include "cryopulse/signal.hpp"

namespace cryopulse {

using complexd = std::complex<double>;
using Matrix3c = std::array<std::array<complexd, 3>, 3>;
using Matrix2c = std::array<std::array<complexd, 2>, 2>;

struct TransmonParams {
    double f01 = 5.6e9;           // Hz (qubit tuned on resonance with the LO)
    double anharmonicity = 250e6; // Hz; f12 = f01 - anharmonicity
    double drive_gain = 0.0;      // kappa, rad/s per volt at the XY port; 0 = use default law
};
inline constexpr double f01_supported_min = 4e9;
inline constexpr double f01_supported_max = 8e9;

// Normalized amplitudes over |0>, |1>, |2>.
struct QuantumState {
    std::array<complexd, 3> amplitudes{complexd{1.0, 0.0}, complexd{0.0, 0.0}, complexd{0.0, 0.0}};

    static QuantumState ground() { return {}; }
    double norm() const;
};

// Drive envelope referenced to the XY port, one sample per integration step.
// detuning = omega01 - omega_LO in rad/s.
struct DriveSegment {
    RealTrace envelope;
    double carrier_phase = 0.0; // radians
    double detuning = 0.0;      // rad/s
};

// Rotating-frame three-level Hamiltonian (units rad/s):
//   H = detuning |1><1| + (2 detuning - delta)|2><2|
//     + (omega/2)[e^{-i phase}(|1><0| + sqrt2 |2><1|) + h.c.],
// delta = 2 pi anharmonicity.
Matrix3c hamiltonian_rwa(const TransmonParams& params, double detuning, double omega, double phase);

// exp(-i H dt) through Hermitian eigendecomposition; unitary to machine
// precision for any step size.
Matrix3c step_propagator(const Matrix3c& h, double dt);

struct Trajectory {
    std::vector<double> t;
    std::vector<std::array<double, 3>> populations;
    std::vector<std::array<double, 3>> bloch;
};

// Piecewise-constant propagation with omega[n] = drive_gain * envelope[n].
// The step equals the envelope sample period (a constant segment is exact in
// a single step). Renormalizes at the end when drift stays below 1e-9,
// otherwise throws NumericalError.
QuantumState propagate(const QuantumState& state, const DriveSegment& segment,
                       const TransmonParams& params, Trajectory* trajectory = nullptr);
QuantumState propagate_sequence(QuantumState state, std::span<const DriveSegment> segments,
                                const TransmonParams& params, Trajectory* trajectory = nullptr);

// R_phi(theta) = exp(-i (theta/2)(cos phi X + sin phi Y)).
Matrix2c ideal_rotation(double theta, double phi);
std::array<complexd, 2> apply(const Matrix2c& u, const std::array<complexd, 2>& v);
Matrix2c multiply(const Matrix2c& a, const Matrix2c& b);

std::array<double, 3> populations(const QuantumState& state);

// Bloch coordinates of the (|0>,|1>) subspace, renormalized by p0+p1.
// Throws UndefinedBlochError when that weight is zero.
std::array<double, 3> bloch_coords(const QuantumState& state);

// CSV columns: t, p0, p1, p2, x, y, z.
void write_trajectory_csv(const Trajectory& trajectory, const std::filesystem::path& path);

} // namespace cryopulse
