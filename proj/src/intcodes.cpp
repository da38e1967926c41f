#include "rlii/intcodes.hpp"

#include <bit>
#include <limits>

#include "rlii/error.hpp"

namespace rlii {

std::string binary_bits(std::uint64_t n) {
    if (n == 0) throw CodecError("binary code is defined for values >= 1");
    unsigned width = static_cast<unsigned>(std::bit_width(n));
    std::string bits;
    bits.reserve(width);
    for (unsigned i = width; i-- > 0;) bits.push_back((n >> i) & 1u ? '1' : '0');
    return bits;
}

std::size_t binary_bit_count(std::uint64_t n) {
    if (n == 0) throw CodecError("binary code is defined for values >= 1");
    return static_cast<std::size_t>(std::bit_width(n));
}

std::string gamma_encode(std::uint64_t n) {
    if (n == 0) throw CodecError("gamma code is defined for values >= 1");
    unsigned width = static_cast<unsigned>(std::bit_width(n));
    std::string bits(width - 1, '0');
    bits.reserve(2 * width - 1);
    for (unsigned i = width; i-- > 0;) bits.push_back((n >> i) & 1u ? '1' : '0');
    return bits;
}

std::uint64_t gamma_decode(std::string_view bits) {
    std::size_t zeros = 0;
    std::size_t i = 0;
    for (; i < bits.size() && bits[i] == '0'; ++i) ++zeros;
    if (i == bits.size()) throw CodecError("truncated gamma code");
    if (bits[i] != '1') throw CodecError("gamma code contains a non-bit character");
    if (zeros >= 64) throw CodecError("gamma code out of range");
    ++i;
    if (bits.size() - i != zeros) throw CodecError("truncated gamma code");
    std::uint64_t value = 1;
    for (; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw CodecError("gamma code contains a non-bit character");
        value = (value << 1) | (bits[i] == '1' ? 1u : 0u);
    }
    return value;
}

std::size_t gamma_bit_count(std::uint64_t n) {
    if (n == 0) throw CodecError("gamma code is defined for values >= 1");
    return 2 * static_cast<std::size_t>(std::bit_width(n)) - 1;
}

void gamma_append(BitWriter& out, std::uint64_t n) {
    if (n == 0) throw CodecError("gamma code is defined for values >= 1");
    unsigned width = static_cast<unsigned>(std::bit_width(n));
    out.push_bits(0, width - 1);
    out.push_bits(n, width);
}

std::uint64_t gamma_read(BitReader& in) {
    unsigned zeros = 0;
    while (!in.read_bit()) {
        if (++zeros >= 64) throw CodecError("gamma code out of range");
    }
    return (std::uint64_t(1) << zeros) | in.read_bits(zeros);
}

std::vector<std::uint64_t> dgap_encode(std::span<const std::uint64_t> docids) {
    if (docids.empty()) throw CodecError("d-gap transform needs a nonempty list");
    if (docids.front() == 0) throw CodecError("document numbers start at 1");
    std::vector<std::uint64_t> gaps;
    gaps.reserve(docids.size());
    gaps.push_back(docids.front());
    for (std::size_t i = 1; i < docids.size(); ++i) {
        if (docids[i] <= docids[i - 1])
            throw CodecError("document numbers must be strictly increasing");
        gaps.push_back(docids[i] - docids[i - 1]);
    }
    return gaps;
}

std::vector<std::uint64_t> dgap_decode(std::span<const std::uint64_t> gaps) {
    std::vector<std::uint64_t> docids;
    docids.reserve(gaps.size());
    std::uint64_t sum = 0;
    for (std::uint64_t gap : gaps) {
        if (gap == 0) throw CodecError("d-gap values must be >= 1");
        if (gap > std::numeric_limits<std::uint64_t>::max() - sum)
            throw CodecError("d-gap prefix sum overflows");
        sum += gap;
        docids.push_back(sum);
    }
    return docids;
}

}  // namespace rlii
