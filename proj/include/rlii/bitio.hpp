#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rlii/error.hpp"

namespace rlii {

// MSB-first bit packer used by the on-disk posting codecs.
class BitWriter {
public:
    void push_bit(bool bit) {
        if (used_ == 0) {
            bytes_.push_back(0);
            used_ = 8;
        }
        --used_;
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << used_);
    }

    void push_bits(std::uint64_t value, unsigned width) {
        for (unsigned i = width; i-- > 0;) push_bit((value >> i) & 1u);
    }

    // Pad with zero bits to the next byte boundary.
    void align() { used_ = 0; }

    std::size_t bit_count() const { return bytes_.size() * 8 - used_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

private:
    std::vector<std::uint8_t> bytes_;
    unsigned used_ = 0;  // unused low bits in the last byte
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    bool read_bit() {
        if (pos_ >= bytes_.size() * 8) throw CodecError("bit stream exhausted");
        bool bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t read_bits(unsigned width) {
        std::uint64_t value = 0;
        for (unsigned i = 0; i < width; ++i) value = (value << 1) | (read_bit() ? 1u : 0u);
        return value;
    }

    std::size_t bits_remaining() const { return bytes_.size() * 8 - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace rlii
