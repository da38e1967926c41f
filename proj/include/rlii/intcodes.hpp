#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlii/bitio.hpp"

namespace rlii {

// Minimal-width binary representation of n >= 1 ("1101100100000011" for 55555).
std::string binary_bits(std::uint64_t n);
std::size_t binary_bit_count(std::uint64_t n);

// Elias gamma: floor(log2 n) zeros, then the binary representation of n.
// Total length 2*floor(log2 n) + 1.
std::string gamma_encode(std::uint64_t n);
std::uint64_t gamma_decode(std::string_view bits);
std::size_t gamma_bit_count(std::uint64_t n);

// Packed gamma for bitstream storage; same layout as the textual form.
void gamma_append(BitWriter& out, std::uint64_t n);
std::uint64_t gamma_read(BitReader& in);

// Differences between successive sorted document numbers. The first gap is
// the first number itself; decode is the prefix-sum inverse.
std::vector<std::uint64_t> dgap_encode(std::span<const std::uint64_t> docids);
std::vector<std::uint64_t> dgap_decode(std::span<const std::uint64_t> gaps);

}  // namespace rlii
