#include "rlii/run_codec.hpp"

#include <charconv>

#include "rlii/error.hpp"

namespace rlii {

namespace {

bool is_digit_symbol(char c) { return c >= '0' && c <= '9'; }
bool is_letter_symbol(char c) { return c >= 'A' && c <= 'F'; }

// Base-6 letter alphabet: A=0 .. F=5.
constexpr int kLetterBase = 6;

std::string bad_docid_message(std::string_view docid) {
    std::string msg = "invalid document number";
    if (!docid.empty()) {
        msg += ": '";
        msg.append(docid);
        msg += "'";
    }
    return msg;
}

}  // namespace

bool is_valid_docid(std::string_view docid) noexcept {
    if (docid.empty() || docid.size() > kMaxDocidDigits) return false;
    if (docid.front() == '0') return false;
    for (char c : docid)
        if (!is_digit_symbol(c)) return false;
    return true;
}

void validate_docid(std::string_view docid) {
    if (!is_valid_docid(docid)) throw CodecError(bad_docid_message(docid));
}

std::uint64_t parse_docid(std::string_view docid) {
    validate_docid(docid);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(docid.data(), docid.data() + docid.size(), value);
    if (ec != std::errc() || ptr != docid.data() + docid.size())
        throw CodecError(bad_docid_message(docid));
    return value;
}

std::vector<DigitRun> find_runs(std::string_view docid) {
    validate_docid(docid);
    std::vector<DigitRun> runs;
    for (std::size_t i = 0; i < docid.size();) {
        std::size_t j = i + 1;
        while (j < docid.size() && docid[j] == docid[i]) ++j;
        runs.push_back({docid[i], static_cast<int>(j - i)});
        i = j;
    }
    return runs;
}

std::string run_code_encode(int run_length) {
    if (run_length < kMinCompressibleRun)
        throw CodecError("run length " + std::to_string(run_length) + " is below the coding threshold");
    int value = run_length - 1 - 4;  // stored value is run_length - 1; letters count from 4
    std::string letters;
    do {
        letters.insert(letters.begin(), static_cast<char>('A' + value % kLetterBase));
        value /= kLetterBase;
    } while (value > 0);
    return letters;
}

int run_code_decode(std::string_view letters) {
    if (letters.empty()) throw CodecError("empty run-length code");
    if (letters.size() > 1 && letters.front() == 'A')
        throw CodecError("non-canonical run-length code (leading A)");
    long long value = 0;
    for (char c : letters) {
        if (!is_letter_symbol(c)) throw CodecError(std::string("invalid run-length letter '") + c + "'");
        value = value * kLetterBase + (c - 'A');
        if (value > 1'000'000) throw CodecError("run-length code out of range");
    }
    return static_cast<int>(value + 4 + 1);
}

std::string compress_docid(std::string_view docid) {
    std::string out;
    for (const DigitRun& run : find_runs(docid)) {
        out.push_back(run.digit);
        if (run.length >= kMinCompressibleRun)
            out += run_code_encode(run.length);
        else
            out.append(static_cast<std::size_t>(run.length - 1), run.digit);
    }
    return out;
}

std::string decompress_docid(std::string_view symbols) {
    if (!is_wellformed_symbols(symbols))
        throw CodecError("malformed compressed document number");
    std::string out;
    std::size_t i = 0;
    while (i < symbols.size()) {
        char digit = symbols[i];
        std::size_t j = i + 1;
        while (j < symbols.size() && is_letter_symbol(symbols[j])) ++j;
        if (j == i + 1) {
            out.push_back(digit);
        } else {
            int run = run_code_decode(symbols.substr(i + 1, j - i - 1));
            if (out.size() + static_cast<std::size_t>(run) > kMaxDocidDigits)
                throw CodecError("compressed document number expands past 19 digits");
            out.append(static_cast<std::size_t>(run), digit);
        }
        if (out.size() > kMaxDocidDigits)
            throw CodecError("compressed document number expands past 19 digits");
        i = j;
    }
    if (out.front() == '0') throw CodecError("compressed document number expands to a leading zero");
    return out;
}

bool is_compressible(std::string_view docid) {
    for (const DigitRun& run : find_runs(docid))
        if (run.length >= kMinCompressibleRun) return true;
    return false;
}

bool is_wellformed_symbols(std::string_view symbols) noexcept {
    if (symbols.empty() || !is_digit_symbol(symbols.front())) return false;
    for (char c : symbols)
        if (!is_digit_symbol(c) && !is_letter_symbol(c)) return false;
    return true;
}

std::string vlq_bits(std::string_view symbols) {
    if (!is_wellformed_symbols(symbols))
        throw CodecError("malformed compressed document number");
    std::string bits;
    for (char c : symbols) {
        unsigned v = is_digit_symbol(c) ? static_cast<unsigned>(c - '0')
                                        : static_cast<unsigned>(c - 'A') + 10u;
        if (v == 0) {
            bits.push_back('0');
            continue;
        }
        unsigned width = 0;
        for (unsigned t = v; t != 0; t >>= 1) ++width;
        for (unsigned i = width; i-- > 0;) bits.push_back((v >> i) & 1u ? '1' : '0');
    }
    return bits;
}

std::size_t vlq_bit_count(std::string_view symbols) { return vlq_bits(symbols).size(); }

std::vector<std::uint8_t> nibble_encode(std::string_view symbols) {
    if (!is_wellformed_symbols(symbols))
        throw CodecError("malformed compressed document number");
    if (symbols.size() > 255) throw CodecError("compressed form exceeds 255 symbols");
    std::vector<std::uint8_t> bytes;
    bytes.reserve(1 + (symbols.size() + 1) / 2);
    bytes.push_back(static_cast<std::uint8_t>(symbols.size()));
    std::uint8_t pending = 0;
    bool half = false;
    for (char c : symbols) {
        std::uint8_t v = is_digit_symbol(c) ? static_cast<std::uint8_t>(c - '0')
                                            : static_cast<std::uint8_t>(c - 'A' + 10);
        if (!half) {
            pending = static_cast<std::uint8_t>(v << 4);
            half = true;
        } else {
            bytes.push_back(static_cast<std::uint8_t>(pending | v));
            half = false;
        }
    }
    if (half) bytes.push_back(pending);
    return bytes;
}

std::string nibble_decode(std::span<const std::uint8_t> bytes) {
    if (bytes.empty()) throw CodecError("empty nibble stream");
    std::size_t count = bytes.front();
    if (count == 0) throw CodecError("nibble stream with zero symbols");
    std::size_t expected = 1 + (count + 1) / 2;
    if (bytes.size() < expected) throw CodecError("truncated nibble stream");
    if (bytes.size() > expected) throw CodecError("trailing bytes after nibble stream");
    std::string symbols;
    symbols.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::uint8_t byte = bytes[1 + i / 2];
        std::uint8_t v = (i % 2 == 0) ? (byte >> 4) : (byte & 0x0F);
        symbols.push_back(v < 10 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10));
    }
    if (count % 2 != 0 && (bytes.back() & 0x0F) != 0)
        throw CodecError("nonzero padding in nibble stream");
    if (!is_wellformed_symbols(symbols))
        throw CodecError("nibble stream violates the symbol grammar");
    return symbols;
}

}  // namespace rlii
