#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>

namespace cryopulse {

inline constexpr std::size_t sub_dac_count = 11;
inline constexpr std::size_t waveform_slot_count = 16;
inline constexpr std::size_t instruction_record_size = 25;
inline constexpr std::size_t memory_image_size = 1 + waveform_slot_count * (1 + instruction_record_size);
inline constexpr int code_p_max = 63;

// One stored pulse program: per-channel sub-DAC weights, reference-current
// codes (I_N) and mixer polarity bits. Weights for I and Q are independent;
// the compiler normally writes one shared shape but the hardware does not
// require it.
struct WaveformInstruction {
    std::array<std::uint8_t, sub_dac_count> weights_i{};
    std::array<std::uint8_t, sub_dac_count> weights_q{};
    std::uint8_t code_n_i = 0;
    std::uint8_t code_n_q = 0;
    int pol_i = +1; // {+1, -1}
    int pol_q = +1;

    bool operator==(const WaveformInstruction&) const = default;
};

// Throws std::invalid_argument unless polarity fields are +/-1.
void validate_instruction(const WaveformInstruction& instr);

// The 16-slot instruction store plus the global 6-bit I_P reference code.
struct WaveformMemory {
    std::array<std::optional<WaveformInstruction>, waveform_slot_count> slots{};
    std::uint8_t code_p = code_p_max;
};

// Returns a copy with `instr` at `slot`; other slots untouched.
// Throws CapacityError for slot >= 16.
WaveformMemory store_instruction(const WaveformMemory& mem, std::size_t slot,
                                 const WaveformInstruction& instr);

// Select lines + trigger: hands the stored instruction to the envelope
// generator. Throws NotProgrammedError on an empty slot.
const WaveformInstruction& select_and_trigger(const WaveformMemory& mem, std::size_t slot);

// 25-byte record: w_i[0..10], w_q[0..10], code_n_i, code_n_q, polarity byte
// (bit0 = pol_i negative, bit1 = pol_q negative, bits 2-7 reserved zero).
std::array<std::uint8_t, instruction_record_size> encode_instruction(const WaveformInstruction& instr);
WaveformInstruction decode_instruction(std::span<const std::uint8_t> record);

// Memory image: code_p byte, then 16 x (presence byte + 25-byte record,
// zero-filled when absent); 417 bytes total.
void write_memory_image(const WaveformMemory& mem, const std::filesystem::path& path);
WaveformMemory read_memory_image(const std::filesystem::path& path);

struct StandardAwgParams {
    double channels = 2;
    double bits_per_sample = 14;
    double sample_rate = 1e9; // samples per second
};

// Select/trigger streaming schedule for the IC: bits_per_gate per gate_period.
struct GateSchedule {
    double gate_period = 22e-9; // seconds
    double bits_per_gate = 5;   // 4 select + 1 trigger

    double stream_rate() const { return bits_per_gate / gate_period; }
};

// Control-link data rate in bits/s for the two architectures.
double estimate_control_data_rate(const StandardAwgParams& params);
double estimate_control_data_rate(const GateSchedule& schedule);

} // namespace cryopulse
