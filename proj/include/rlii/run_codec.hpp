#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rlii {

// Runs shorter than this stay literal; a run of kMinCompressibleRun or more
// identical digits is replaced by the digit plus a letter code.
inline constexpr int kMinCompressibleRun = 5;

// Document numbers are capped so the string and uint64 forms interconvert.
inline constexpr std::size_t kMaxDocidDigits = 19;
inline constexpr std::uint64_t kMaxDocidValue = 9'999'999'999'999'999'999ULL;

// Valid document numbers match [1-9][0-9]* and have at most 19 digits.
bool is_valid_docid(std::string_view docid) noexcept;
void validate_docid(std::string_view docid);
std::uint64_t parse_docid(std::string_view docid);

struct DigitRun {
    char digit;
    int length;

    bool operator==(const DigitRun&) const = default;
};

// Maximal runs of identical digits, in order. Concatenating digit*length
// over the result reproduces the input.
std::vector<DigitRun> find_runs(std::string_view docid);

/// Letter code for one run: a run of n stores n-1, letters A..F cover stored
/// values 4..9, longer runs use base-6 letter digits (A=0..F=5, no leading A).
std::string run_code_encode(int run_length);
int run_code_decode(std::string_view letters);

std::string compress_docid(std::string_view docid);
std::string decompress_docid(std::string_view symbols);

// True iff the document number contains a digit run of length >= 5,
// i.e. compress_docid would change it.
bool is_compressible(std::string_view docid);

// Grammar check: nonempty, symbols drawn from {0-9, A-F}, starts with a digit
// (every letter group is attached to the digit before it).
bool is_wellformed_symbols(std::string_view symbols) noexcept;

// Per-symbol accounting bits: each symbol costs the minimal binary length of
// its ordinal (0,1 -> 1 bit ... 8..F -> 4 bits). The concatenation is not a
// prefix code, so this is used for size measurement only, never storage.
std::string vlq_bits(std::string_view symbols);
std::size_t vlq_bit_count(std::string_view symbols);

// Storable form: one symbol-count byte, then 4-bit nibbles (0x0..0xF),
// zero-padded to a byte boundary.
std::vector<std::uint8_t> nibble_encode(std::string_view symbols);
std::string nibble_decode(std::span<const std::uint8_t> bytes);

}  // namespace rlii
