#pragma once

#include <stdexcept>

namespace cryopulse {

// Slot index beyond the 16-entry on-chip waveform store.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Triggering a waveform slot that was never programmed.
struct NotProgrammedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed binary record (instruction codec, memory image).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Propagation lost unitarity beyond the accepted drift budget.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Amplitude calibration could not reach the requested rotation.
struct CalibrationRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An experiment was started without a required prior calibration.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bloch coordinates requested for a state with no qubit-subspace weight.
struct UndefinedBlochError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cryopulse
