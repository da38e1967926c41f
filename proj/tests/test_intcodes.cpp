#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "rlii/bitio.hpp"
#include "rlii/error.hpp"
#include "rlii/intcodes.hpp"

using namespace rlii;

TEST_SUITE("binary bits") {
    TEST_CASE("reference widths") {
        CHECK(binary_bits(55555) == "1101100100000011");
        CHECK(binary_bits(1) == "1");
        CHECK(binary_bits(2222222).size() == 22);
        CHECK(binary_bits(999999) == "11110100001000111111");
        CHECK_THROWS_AS(binary_bits(0), CodecError);
        CHECK_THROWS_AS(binary_bit_count(0), CodecError);
    }

    TEST_CASE("width equals the value's bit length") {
        std::mt19937_64 gen(3);
        for (int i = 0; i < 2000; ++i) {
            std::uint64_t n = gen() | 1u;
            std::string bits = binary_bits(n);
            CHECK(bits.size() == binary_bit_count(n));
            std::uint64_t parsed = 0;
            for (char c : bits) parsed = (parsed << 1) | (c == '1' ? 1u : 0u);
            CHECK(parsed == n);
            CHECK(bits.front() == '1');
        }
    }
}

TEST_SUITE("elias gamma") {
    TEST_CASE("known codewords") {
        CHECK(gamma_encode(1) == "1");
        CHECK(gamma_encode(5) == "00101");
        CHECK(gamma_encode(55555).size() == 31);
        CHECK(gamma_decode("1") == 1);
        CHECK(gamma_decode("00101") == 5);
        CHECK(gamma_decode(gamma_encode(55555)) == 55555);
    }

    TEST_CASE("length law 2*floor(log2 n) + 1") {
        std::size_t expected = 1;
        std::uint64_t next_power = 2;
        std::uint64_t mismatches = 0;
        for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
            if (n == next_power) {
                expected += 2;
                next_power <<= 1;
            }
            if (gamma_bit_count(n) != expected) ++mismatches;
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("round trip 1..100000 and random 64-bit values") {
        std::uint64_t mismatches = 0;
        for (std::uint64_t n = 1; n <= 100'000; ++n)
            if (gamma_decode(gamma_encode(n)) != n) ++mismatches;
        CHECK(mismatches == 0);
        std::mt19937_64 gen(17);
        for (int i = 0; i < 5000; ++i) {
            std::uint64_t n = gen() | 1u;
            CHECK(gamma_decode(gamma_encode(n)) == n);
            CHECK(gamma_encode(n).size() == gamma_bit_count(n));
        }
    }

    TEST_CASE("malformed codewords") {
        CHECK_THROWS_AS(gamma_decode(""), CodecError);
        CHECK_THROWS_AS(gamma_decode("00"), CodecError);
        CHECK_THROWS_AS(gamma_decode("001"), CodecError);     // missing suffix bits
        CHECK_THROWS_AS(gamma_decode("001011"), CodecError);  // trailing bits
        CHECK_THROWS_AS(gamma_decode("0x1"), CodecError);
        CHECK_THROWS_AS(gamma_encode(0), CodecError);
    }

    TEST_CASE("packed form matches the textual form") {
        std::mt19937_64 gen(23);
        std::vector<std::uint64_t> values;
        for (int i = 0; i < 500; ++i) values.push_back((gen() % 1'000'000) + 1);
        BitWriter writer;
        std::string textual;
        for (std::uint64_t v : values) {
            gamma_append(writer, v);
            textual += gamma_encode(v);
        }
        CHECK(writer.bit_count() == textual.size());
        BitReader reader(writer.bytes());
        for (std::uint64_t v : values) CHECK(gamma_read(reader) == v);
    }
}

TEST_SUITE("d-gap transform") {
    TEST_CASE("worked example") {
        std::vector<std::uint64_t> docids{50, 70, 110, 190, 240};
        std::vector<std::uint64_t> gaps{50, 20, 40, 80, 50};
        CHECK(dgap_encode(docids) == gaps);
        CHECK(dgap_decode(gaps) == docids);
        CHECK(dgap_encode(std::vector<std::uint64_t>{7}) == std::vector<std::uint64_t>{7});
        CHECK(dgap_decode(std::vector<std::uint64_t>{1}) == std::vector<std::uint64_t>{1});
    }

    TEST_CASE("rejects non-increasing input and zero gaps") {
        CHECK_THROWS_AS(dgap_encode(std::vector<std::uint64_t>{5, 5}), CodecError);
        CHECK_THROWS_AS(dgap_encode(std::vector<std::uint64_t>{5, 3}), CodecError);
        CHECK_THROWS_AS(dgap_encode(std::vector<std::uint64_t>{}), CodecError);
        CHECK_THROWS_AS(dgap_encode(std::vector<std::uint64_t>{0, 3}), CodecError);
        CHECK_THROWS_AS(dgap_decode(std::vector<std::uint64_t>{1, 0}), CodecError);
    }

    TEST_CASE("decode is the prefix-sum inverse on random sorted lists") {
        std::mt19937_64 gen(29);
        for (int i = 0; i < 500; ++i) {
            std::uniform_int_distribution<int> len_dist(1, 200);
            std::uniform_int_distribution<std::uint64_t> gap_dist(1, 1'000'000);
            int len = len_dist(gen);
            std::vector<std::uint64_t> docids;
            std::uint64_t value = 0;
            for (int j = 0; j < len; ++j) {
                value += gap_dist(gen);
                docids.push_back(value);
            }
            CHECK(dgap_decode(dgap_encode(docids)) == docids);
        }
    }
}

TEST_SUITE("bit io") {
    TEST_CASE("round trips values at every width") {
        std::mt19937_64 gen(31);
        BitWriter writer;
        std::vector<std::pair<std::uint64_t, unsigned>> entries;
        for (unsigned width = 1; width <= 64; ++width) {
            std::uint64_t mask = width == 64 ? ~0ull : ((1ull << width) - 1);
            std::uint64_t v = gen() & mask;
            entries.emplace_back(v, width);
            writer.push_bits(v, width);
        }
        BitReader reader(writer.bytes());
        for (auto [v, width] : entries) CHECK(reader.read_bits(width) == v);
    }

    TEST_CASE("align pads with zeros and exhaustion throws") {
        BitWriter writer;
        writer.push_bit(true);
        writer.align();
        CHECK(writer.bytes() == std::vector<std::uint8_t>{0x80});
        BitReader reader(writer.bytes());
        CHECK(reader.read_bits(8) == 0x80);
        CHECK_THROWS_AS(reader.read_bit(), CodecError);
    }
}
