#include "cryopulse/waveform_memory.hpp"

#include <stdexcept>
#include <string>

#include "cryopulse/errors.hpp"
#include "cryopulse/io.hpp"

namespace cryopulse {

void validate_instruction(const WaveformInstruction& instr) {
    if ((instr.pol_i != 1 && instr.pol_i != -1) || (instr.pol_q != 1 && instr.pol_q != -1)) {
        throw std::invalid_argument("instruction polarity must be +1 or -1");
    }
}

WaveformMemory store_instruction(const WaveformMemory& mem, std::size_t slot,
                                 const WaveformInstruction& instr) {
    if (slot >= waveform_slot_count) {
        throw CapacityError("waveform memory holds 16 instructions; slot " + std::to_string(slot) +
                            " does not exist");
    }
    validate_instruction(instr);
    WaveformMemory out = mem;
    out.slots[slot] = instr;
    return out;
}

const WaveformInstruction& select_and_trigger(const WaveformMemory& mem, std::size_t slot) {
    if (slot >= waveform_slot_count) {
        throw CapacityError("slot " + std::to_string(slot) + " does not exist");
    }
    const auto& entry = mem.slots[slot];
    if (!entry.has_value()) {
        throw NotProgrammedError("slot " + std::to_string(slot) + " was never programmed");
    }
    return *entry;
}

std::array<std::uint8_t, instruction_record_size> encode_instruction(const WaveformInstruction& instr) {
    validate_instruction(instr);
    std::array<std::uint8_t, instruction_record_size> record{};
    for (std::size_t k = 0; k < sub_dac_count; ++k) {
        record[k] = instr.weights_i[k];
        record[sub_dac_count + k] = instr.weights_q[k];
    }
    record[22] = instr.code_n_i;
    record[23] = instr.code_n_q;
    std::uint8_t pol = 0;
    if (instr.pol_i < 0) {
        pol |= 0x01;
    }
    if (instr.pol_q < 0) {
        pol |= 0x02;
    }
    record[24] = pol;
    return record;
}

WaveformInstruction decode_instruction(std::span<const std::uint8_t> record) {
    if (record.size() != instruction_record_size) {
        throw FormatError("instruction record must be 25 bytes");
    }
    if ((record[24] & 0xfc) != 0) {
        throw FormatError("instruction record: reserved polarity bits set");
    }
    WaveformInstruction instr;
    for (std::size_t k = 0; k < sub_dac_count; ++k) {
        instr.weights_i[k] = record[k];
        instr.weights_q[k] = record[sub_dac_count + k];
    }
    instr.code_n_i = record[22];
    instr.code_n_q = record[23];
    instr.pol_i = (record[24] & 0x01) ? -1 : +1;
    instr.pol_q = (record[24] & 0x02) ? -1 : +1;
    return instr;
}

void write_memory_image(const WaveformMemory& mem, const std::filesystem::path& path) {
    if (mem.code_p > code_p_max) {
        throw std::invalid_argument("memory code_p exceeds 6-bit range");
    }
    std::string image;
    image.reserve(memory_image_size);
    image.push_back(static_cast<char>(mem.code_p));
    for (const auto& slot : mem.slots) {
        image.push_back(slot.has_value() ? '\x01' : '\x00');
        std::array<std::uint8_t, instruction_record_size> record{};
        if (slot.has_value()) {
            record = encode_instruction(*slot);
        }
        image.append(reinterpret_cast<const char*>(record.data()), record.size());
    }
    write_file_atomic(path, image);
}

WaveformMemory read_memory_image(const std::filesystem::path& path) {
    const std::string image = read_file(path);
    if (image.size() != memory_image_size) {
        throw FormatError("memory image must be exactly " + std::to_string(memory_image_size) +
                          " bytes");
    }
    WaveformMemory mem;
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(image.data());
    if (bytes[0] > code_p_max) {
        throw FormatError("memory image: code_p exceeds 6-bit range");
    }
    mem.code_p = bytes[0];
    std::size_t offset = 1;
    for (std::size_t slot = 0; slot < waveform_slot_count; ++slot) {
        const std::uint8_t present = bytes[offset];
        if (present > 1) {
            throw FormatError("memory image: presence byte must be 0 or 1");
        }
        std::span<const std::uint8_t> record(bytes + offset + 1, instruction_record_size);
        if (present == 1) {
            mem.slots[slot] = decode_instruction(record);
        }
        offset += 1 + instruction_record_size;
    }
    return mem;
}

double estimate_control_data_rate(const StandardAwgParams& params) {
    if (!(params.channels > 0) || !(params.bits_per_sample > 0) || !(params.sample_rate > 0)) {
        throw std::invalid_argument("standard AWG data rate needs positive parameters");
    }
    return params.channels * params.bits_per_sample * params.sample_rate;
}

double estimate_control_data_rate(const GateSchedule& schedule) {
    if (!(schedule.gate_period > 0)) {
        throw std::invalid_argument("gate period must be positive");
    }
    if (schedule.bits_per_gate < 0) {
        throw std::invalid_argument("bits per gate must be non-negative");
    }
    return schedule.stream_rate();
}

} // namespace cryopulse
