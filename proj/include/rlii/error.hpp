#pragma once

#include <stdexcept>
#include <string>

namespace rlii {

// Malformed document numbers, symbol strings, codewords or byte streams.
struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally unusable request (empty term list, empty bench input).
// Maps to CLI exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Corpus ingestion failures; the message names the offending line or file.
struct CorpusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexError : std::runtime_error {
    enum class Kind { duplicate_doc, not_found };

    IndexError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

    Kind kind;
};

struct IndexFileError : std::runtime_error {
    enum class Kind { io, bad_magic, bad_version, corrupt_section, codec_decode };

    IndexFileError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

    Kind kind;
};

}  // namespace rlii
