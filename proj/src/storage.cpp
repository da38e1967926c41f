#include "rlii/storage.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>

#include "rlii/bitio.hpp"
#include "rlii/error.hpp"
#include "rlii/intcodes.hpp"
#include "rlii/run_codec.hpp"

namespace rlii {

namespace {

using Kind = IndexFileError::Kind;

// 4 magic + u16 version + codec/dgap/width bytes + 3 reserved + section table.
constexpr std::size_t kHeaderBytes = 4 + 2 + 3 + 3 + kSectionCount * 16;

struct ByteWriter {
    std::string buf;

    void u8(std::uint8_t v) { buf.push_back(static_cast<char>(v)); }
    void u16(std::uint16_t v) {
        for (int i = 0; i < 2; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void bytes(std::string_view v) { buf.append(v); }
    void bytes(std::span<const std::uint8_t> v) {
        buf.append(reinterpret_cast<const char*>(v.data()), v.size());
    }
};

struct ByteReader {
    std::string_view buf;
    std::size_t pos = 0;

    void require(std::size_t n) const {
        if (buf.size() - pos < n) throw IndexFileError(Kind::corrupt_section, "section truncated");
    }
    std::uint8_t u8() {
        require(1);
        return static_cast<std::uint8_t>(buf[pos++]);
    }
    std::uint16_t u16() {
        std::uint16_t v = 0;
        for (int i = 0; i < 2; ++i) v |= static_cast<std::uint16_t>(u8()) << (8 * i);
        return v;
    }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
        return v;
    }
    std::string_view bytes(std::size_t n) {
        require(n);
        std::string_view v = buf.substr(pos, n);
        pos += n;
        return v;
    }
    bool done() const { return pos == buf.size(); }
};

std::uint64_t decompress_key(const std::string& key) {
    return parse_docid(decompress_docid(key));
}

std::uint8_t collection_bit_width(const Index& index) {
    std::uint64_t max_docid = 0;
    if (!index.address_table().part1.empty())
        max_docid = std::max(max_docid, index.address_table().part1.rbegin()->first);
    for (const auto& [key, address] : index.address_table().part2)
        max_docid = std::max(max_docid, decompress_key(key));
    return max_docid == 0 ? 1 : static_cast<std::uint8_t>(std::bit_width(max_docid));
}

std::string encode_posting_list(const TermRecord& record, CodecConfig codec, std::uint8_t width) {
    std::vector<std::uint64_t> values;
    values.reserve(record.postings.size());
    for (const Posting& posting : record.postings) values.push_back(posting.docid);
    if (codec.gap_transform && !values.empty()) values = dgap_encode(values);

    ByteWriter out;
    out.u32(static_cast<std::uint32_t>(record.postings.size()));
    switch (codec.kind) {
        case CodecKind::binary_fixed: {
            BitWriter bits;
            for (std::uint64_t v : values) {
                if (std::bit_width(v) > width)
                    throw IndexFileError(Kind::codec_decode,
                                         "value exceeds the fixed binary width");
                bits.push_bits(v, width);
            }
            out.bytes(bits.bytes());
            break;
        }
        case CodecKind::gamma: {
            BitWriter bits;
            for (std::uint64_t v : values) gamma_append(bits, v);
            out.bytes(bits.bytes());
            break;
        }
        case CodecKind::digit_run_nibble: {
            for (std::uint64_t v : values)
                out.bytes(nibble_encode(compress_docid(std::to_string(v))));
            break;
        }
    }
    for (const Posting& posting : record.postings) out.u8(posting.weight);
    return std::move(out.buf);
}

std::vector<Posting> decode_posting_list(std::string_view blob, std::uint32_t expected_count,
                                         CodecConfig codec, std::uint8_t width) {
    ByteReader in{blob};
    std::uint32_t count = in.u32();
    if (count != expected_count)
        throw IndexFileError(Kind::corrupt_section, "posting count mismatch");

    std::vector<std::uint64_t> values;
    values.reserve(count);
    try {
        switch (codec.kind) {
            case CodecKind::binary_fixed: {
                std::size_t bytes = (std::size_t(count) * width + 7) / 8;
                in.require(bytes);
                auto packed = in.bytes(bytes);
                BitReader bits(std::span(reinterpret_cast<const std::uint8_t*>(packed.data()),
                                         packed.size()));
                for (std::uint32_t i = 0; i < count; ++i) {
                    std::uint64_t v = bits.read_bits(width);
                    if (v == 0) throw CodecError("zero value in fixed binary stream");
                    values.push_back(v);
                }
                break;
            }
            case CodecKind::gamma: {
                if (blob.size() < in.pos + count)
                    throw IndexFileError(Kind::corrupt_section, "posting list truncated");
                std::size_t remaining = blob.size() - in.pos - count;  // weights follow
                auto packed = in.bytes(remaining);
                BitReader bits(std::span(reinterpret_cast<const std::uint8_t*>(packed.data()),
                                         packed.size()));
                for (std::uint32_t i = 0; i < count; ++i) values.push_back(gamma_read(bits));
                break;
            }
            case CodecKind::digit_run_nibble: {
                for (std::uint32_t i = 0; i < count; ++i) {
                    std::uint8_t symbol_count = in.u8();
                    std::size_t body = (std::size_t(symbol_count) + 1) / 2;
                    auto rest = in.bytes(body);
                    std::vector<std::uint8_t> chunk;
                    chunk.reserve(1 + body);
                    chunk.push_back(symbol_count);
                    chunk.insert(chunk.end(), rest.begin(), rest.end());
                    values.push_back(parse_docid(decompress_docid(nibble_decode(chunk))));
                }
                break;
            }
        }
        if (codec.gap_transform && !values.empty()) values = dgap_decode(values);
        for (std::uint64_t v : values)
            if (v > kMaxDocidValue) throw CodecError("document number exceeds 19 digits");
    } catch (const CodecError& e) {
        throw IndexFileError(Kind::codec_decode, std::string("posting list decode failed: ") + e.what());
    }

    std::vector<Posting> postings;
    postings.reserve(count);
    in.require(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        std::uint8_t weight = in.u8();
        if (weight > 100)
            throw IndexFileError(Kind::corrupt_section, "posting weight out of range");
        postings.push_back({values[i], weight});
    }
    for (std::size_t i = 1; i < postings.size(); ++i)
        if (postings[i].docid <= postings[i - 1].docid)
            throw IndexFileError(Kind::corrupt_section, "posting list is not strictly increasing");
    if (!in.done()) throw IndexFileError(Kind::corrupt_section, "trailing bytes in posting list");
    return postings;
}

struct RawFile {
    std::string data;
};

RawFile slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IndexFileError(Kind::io, "cannot open '" + path.string() + "'");
    RawFile file;
    file.data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (in.bad()) throw IndexFileError(Kind::io, "read failure on '" + path.string() + "'");
    return file;
}

struct ParsedHeader {
    CodecConfig codec;
    std::uint8_t width = 0;
    std::array<SectionRange, kSectionCount> sections;
};

ParsedHeader parse_header(std::string_view data) {
    if (data.size() < 4 || data.substr(0, 4) != std::string_view(kIndexMagic.data(), 4))
        throw IndexFileError(Kind::bad_magic, "not an index file (bad magic)");
    if (data.size() < kHeaderBytes)
        throw IndexFileError(Kind::corrupt_section, "header truncated");

    ByteReader in{data, 4};
    std::uint16_t version = in.u16();
    if (version != kIndexFormatVersion)
        throw IndexFileError(Kind::bad_version,
                             "unsupported format version " + std::to_string(version));

    ParsedHeader header;
    std::uint8_t codec = in.u8();
    if (codec > 2) throw IndexFileError(Kind::corrupt_section, "unknown codec id");
    header.codec.kind = static_cast<CodecKind>(codec);
    std::uint8_t dgap = in.u8();
    if (dgap > 1) throw IndexFileError(Kind::corrupt_section, "invalid gap-transform flag");
    header.codec.gap_transform = dgap != 0;
    header.width = in.u8();
    if (header.codec.kind == CodecKind::binary_fixed && (header.width == 0 || header.width > 64))
        throw IndexFileError(Kind::corrupt_section, "fixed binary width out of range");
    in.bytes(3);  // reserved

    std::uint64_t previous_end = kHeaderBytes;
    for (std::size_t i = 0; i < kSectionCount; ++i) {
        header.sections[i].offset = in.u64();
        header.sections[i].length = in.u64();
        const SectionRange& s = header.sections[i];
        if (s.offset < previous_end || s.offset + s.length > data.size() ||
            s.offset + s.length < s.offset)
            throw IndexFileError(Kind::corrupt_section, "section out of bounds or overlapping");
        previous_end = s.offset + s.length;
    }
    if (previous_end != data.size())
        throw IndexFileError(Kind::corrupt_section, "trailing bytes after the last section");
    return header;
}

std::string_view section(std::string_view data, const ParsedHeader& header, Section which) {
    const SectionRange& s = header.sections[static_cast<std::size_t>(which)];
    return data.substr(s.offset, s.length);
}

}  // namespace

std::size_t write_index(const Index& index, CodecConfig codec, const std::filesystem::path& destination) {
    std::uint8_t width = codec.kind == CodecKind::binary_fixed ? collection_bit_width(index) : 0;

    ByteWriter postings;
    ByteWriter vocab;
    vocab.u32(static_cast<std::uint32_t>(index.vocabulary().size()));
    for (const auto& [term, record] : index.vocabulary()) {
        if (term.size() > 0xFFFF)
            throw IndexFileError(Kind::io, "term exceeds the 65535-byte limit");
        std::string blob = encode_posting_list(record, codec, width);
        vocab.u16(static_cast<std::uint16_t>(term.size()));
        vocab.bytes(term);
        vocab.u64(postings.buf.size());
        vocab.u32(static_cast<std::uint32_t>(blob.size()));
        vocab.u32(static_cast<std::uint32_t>(record.postings.size()));
        postings.bytes(blob);
    }

    ByteWriter part1;
    part1.u32(static_cast<std::uint32_t>(index.address_table().part1.size()));
    for (const auto& [docid, address] : index.address_table().part1) {
        part1.u64(docid);
        part1.u32(address.file_id);
        part1.u64(address.offset);
        part1.u64(address.length);
    }

    ByteWriter part2;
    part2.u32(static_cast<std::uint32_t>(index.address_table().part2.size()));
    for (const auto& [key, address] : index.address_table().part2) {
        part2.bytes(nibble_encode(key));
        part2.u32(address.file_id);
        part2.u64(address.offset);
        part2.u64(address.length);
    }

    const std::string& docs = index.doc_store();

    std::array<SectionRange, kSectionCount> sections;
    std::uint64_t offset = kHeaderBytes;
    const std::string* bodies[kSectionCount] = {&vocab.buf, &postings.buf, &part1.buf,
                                                &part2.buf, &docs};
    for (std::size_t i = 0; i < kSectionCount; ++i) {
        sections[i] = {offset, bodies[i]->size()};
        offset += bodies[i]->size();
    }

    ByteWriter header;
    header.bytes(std::string_view(kIndexMagic.data(), 4));
    header.u16(kIndexFormatVersion);
    header.u8(static_cast<std::uint8_t>(codec.kind));
    header.u8(codec.gap_transform ? 1 : 0);
    header.u8(width);
    header.u8(0);
    header.u8(0);
    header.u8(0);
    for (const SectionRange& s : sections) {
        header.u64(s.offset);
        header.u64(s.length);
    }

    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IndexFileError(Kind::io, "cannot write '" + destination.string() + "'");
    out.write(header.buf.data(), static_cast<std::streamsize>(header.buf.size()));
    for (const std::string* body : bodies)
        out.write(body->data(), static_cast<std::streamsize>(body->size()));
    out.flush();
    if (!out) throw IndexFileError(Kind::io, "write failure on '" + destination.string() + "'");
    return header.buf.size() + vocab.buf.size() + postings.buf.size() + part1.buf.size() +
           part2.buf.size() + docs.size();
}

Index read_index(const std::filesystem::path& source) {
    RawFile file = slurp(source);
    ParsedHeader header = parse_header(file.data);

    std::string_view postings = section(file.data, header, Section::postings);
    std::string_view doc_store = section(file.data, header, Section::doc_store);

    std::map<std::string, TermRecord, std::less<>> vocabulary;
    {
        ByteReader in{section(file.data, header, Section::vocabulary)};
        std::uint32_t term_count = in.u32();
        std::string previous;
        for (std::uint32_t i = 0; i < term_count; ++i) {
            std::uint16_t len = in.u16();
            std::string term(in.bytes(len));
            if (i > 0 && term <= previous)
                throw IndexFileError(Kind::corrupt_section, "vocabulary is not sorted");
            std::uint64_t rel_offset = in.u64();
            std::uint32_t byte_len = in.u32();
            std::uint32_t posting_count = in.u32();
            if (rel_offset + byte_len > postings.size() || rel_offset + byte_len < rel_offset)
                throw IndexFileError(Kind::corrupt_section, "posting slice out of bounds");
            TermRecord record;
            record.term = term;
            record.postings = decode_posting_list(postings.substr(rel_offset, byte_len),
                                                  posting_count, header.codec, header.width);
            previous = term;
            vocabulary.emplace(std::move(term), std::move(record));
        }
        if (!in.done()) throw IndexFileError(Kind::corrupt_section, "trailing bytes in vocabulary");
    }

    AddressTable addresses;
    {
        ByteReader in{section(file.data, header, Section::addr_part1)};
        std::uint32_t count = in.u32();
        for (std::uint32_t i = 0; i < count; ++i) {
            std::uint64_t docid = in.u64();
            DocumentAddress address{in.u32(), in.u64(), in.u64()};
            if (docid == 0 || is_compressible(std::to_string(docid)))
                throw IndexFileError(Kind::corrupt_section, "part-1 key belongs in part 2");
            if (address.offset + address.length > doc_store.size())
                throw IndexFileError(Kind::corrupt_section, "document address out of bounds");
            if (!addresses.part1.emplace(docid, address).second)
                throw IndexFileError(Kind::corrupt_section, "duplicate part-1 key");
        }
        if (!in.done()) throw IndexFileError(Kind::corrupt_section, "trailing bytes in address table");
    }
    {
        ByteReader in{section(file.data, header, Section::addr_part2)};
        std::uint32_t count = in.u32();
        for (std::uint32_t i = 0; i < count; ++i) {
            std::uint8_t symbol_count = in.u8();
            std::size_t body = (std::size_t(symbol_count) + 1) / 2;
            auto rest = in.bytes(body);
            std::vector<std::uint8_t> chunk;
            chunk.push_back(symbol_count);
            chunk.insert(chunk.end(), rest.begin(), rest.end());
            std::string key;
            try {
                key = nibble_decode(chunk);
                std::string docid = decompress_docid(key);
                if (!is_compressible(docid) || compress_docid(docid) != key)
                    throw CodecError("part-2 key is not a canonical compressed number");
            } catch (const CodecError& e) {
                throw IndexFileError(Kind::codec_decode,
                                     std::string("address key decode failed: ") + e.what());
            }
            DocumentAddress address{in.u32(), in.u64(), in.u64()};
            if (address.offset + address.length > doc_store.size())
                throw IndexFileError(Kind::corrupt_section, "document address out of bounds");
            if (!addresses.part2.emplace(std::move(key), address).second)
                throw IndexFileError(Kind::corrupt_section, "duplicate part-2 key");
        }
        if (!in.done()) throw IndexFileError(Kind::corrupt_section, "trailing bytes in address table");
    }

    // Every posting must resolve through exactly one address-table part.
    for (const auto& [term, record] : vocabulary) {
        for (const Posting& posting : record.postings) {
            std::string docid = std::to_string(posting.docid);
            bool known = is_compressible(docid)
                             ? addresses.part2.contains(compress_docid(docid))
                             : addresses.part1.contains(posting.docid);
            if (!known)
                throw IndexFileError(Kind::corrupt_section,
                                     "posting references an unknown document");
        }
    }

    return Index::from_parts(std::move(vocabulary), std::move(addresses), std::string(doc_store));
}

IndexFileInfo inspect_index(const std::filesystem::path& source) {
    RawFile file = slurp(source);
    ParsedHeader header = parse_header(file.data);

    IndexFileInfo info;
    info.version = kIndexFormatVersion;
    info.codec = header.codec;
    info.binary_width = header.width;
    info.sections = header.sections;
    info.file_bytes = file.data.size();
    {
        ByteReader in{section(file.data, header, Section::vocabulary)};
        info.term_count = in.u32();
    }
    {
        ByteReader in{section(file.data, header, Section::addr_part1)};
        info.part1_count = in.u32();
    }
    {
        ByteReader in{section(file.data, header, Section::addr_part2)};
        info.part2_count = in.u32();
    }
    return info;
}

std::vector<Document> ingest_corpus(const std::filesystem::path& path, CorpusMode mode) {
    std::vector<Document> corpus;
    std::set<std::string> seen;

    if (mode == CorpusMode::tsv) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw CorpusError("cannot open corpus '" + path.string() + "'");
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t tab = line.find('\t');
            if (tab == std::string::npos)
                throw CorpusError("line " + std::to_string(line_no) + ": missing tab separator");
            std::string docid = line.substr(0, tab);
            if (!is_valid_docid(docid))
                throw CorpusError("line " + std::to_string(line_no) +
                                  ": invalid document number '" + docid + "'");
            if (!seen.insert(docid).second)
                throw CorpusError("line " + std::to_string(line_no) +
                                  ": duplicate document number '" + docid + "'");
            corpus.push_back({std::move(docid), line.substr(tab + 1)});
        }
        if (in.bad()) throw CorpusError("read failure on '" + path.string() + "'");
        return corpus;
    }

    std::error_code ec;
    std::filesystem::directory_iterator dir(path, ec);
    if (ec) throw CorpusError("cannot open corpus directory '" + path.string() + "'");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : dir)
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::ifstream in(files[i], std::ios::binary);
        if (!in) throw CorpusError("cannot read '" + files[i].string() + "'");
        std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
        if (in.bad()) throw CorpusError("read failure on '" + files[i].string() + "'");
        corpus.push_back({std::to_string(i + 1), std::move(text)});
    }
    return corpus;
}

}  // namespace rlii
