#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rlii/index.hpp"

namespace rlii {

enum class CodecKind : std::uint8_t {
    binary_fixed = 0,     // collection-wide fixed width per value
    gamma = 1,            // Elias gamma bitstream per list
    digit_run_nibble = 2  // digit-run compressed decimal form, nibble-packed
};

struct CodecConfig {
    CodecKind kind = CodecKind::digit_run_nibble;
    bool gap_transform = false;  // d-gap docids before encoding
};

inline constexpr std::array<char, 4> kIndexMagic = {'R', 'L', 'I', 'I'};
inline constexpr std::uint16_t kIndexFormatVersion = 1;

enum class Section : std::size_t { vocabulary, postings, addr_part1, addr_part2, doc_store };
inline constexpr std::size_t kSectionCount = 5;

struct SectionRange {
    std::uint64_t offset = 0;
    std::uint64_t length = 0;
};

struct IndexFileInfo {
    std::uint16_t version = 0;
    CodecConfig codec;
    std::uint8_t binary_width = 0;  // bit width used by binary_fixed
    std::array<SectionRange, kSectionCount> sections;
    std::size_t file_bytes = 0;
    std::size_t term_count = 0;
    std::size_t part1_count = 0;
    std::size_t part2_count = 0;
    std::size_t doc_count() const { return part1_count + part2_count; }
};

// Serializes header, vocabulary, codec-encoded posting lists, both address
// table parts and the document store. Returns the byte count written.
std::size_t write_index(const Index& index, CodecConfig codec, const std::filesystem::path& destination);

// Exact logical inverse of write_index. Throws IndexFileError with a
// distinct kind for bad magic, unsupported version, corrupt section bounds
// and codec decode failures.
Index read_index(const std::filesystem::path& source);

// Header and section summary without decoding the posting lists.
IndexFileInfo inspect_index(const std::filesystem::path& source);

enum class CorpusMode { tsv, dir };

// TSV: one `docid<TAB>text` per line. DIR: every *.txt file in sorted
// filename order, documents numbered 1..n.
std::vector<Document> ingest_corpus(const std::filesystem::path& path, CorpusMode mode);

}  // namespace rlii
