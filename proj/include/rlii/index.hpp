#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlii/parallel.hpp"

namespace rlii {

struct Posting {
    std::uint64_t docid;
    std::uint8_t weight;  // 0..100

    bool operator==(const Posting&) const = default;
};

struct TermRecord {
    std::string term;
    std::vector<Posting> postings;  // sorted by ascending docid, no duplicates

    bool operator==(const TermRecord&) const = default;
};

// Locates a document's stored text: byte range inside the document store.
struct DocumentAddress {
    std::uint32_t file_id;
    std::uint64_t offset;
    std::uint64_t length;

    bool operator==(const DocumentAddress&) const = default;
};

// Two-part document map: numbers without a compressible digit run live in
// part1 under their plain value, the rest in part2 under the compressed form.
struct AddressTable {
    std::map<std::uint64_t, DocumentAddress> part1;
    std::map<std::string, DocumentAddress, std::less<>> part2;

    bool operator==(const AddressTable&) const = default;
};

struct Document {
    std::string docid;
    std::string text;
};

struct QueryResult {
    std::uint64_t docid;
    int score;

    bool operator==(const QueryResult&) const = default;
};

// Lowercase, split on any non-alphanumeric byte, drop empty tokens.
std::vector<std::string> tokenize(std::string_view text);

// Document-local scaled term frequency, rounded to 0..100. Weights never
// depend on other documents, so inserts stay cheap.
int compute_weight(std::uint32_t tf, std::uint32_t max_tf);

class Index {
public:
    Index() = default;

    // Token counting runs per document (parallel by default); the merge is
    // identical to folding insert() over the corpus in order.
    static Index build(std::span<const Document> corpus, ExecMode mode = ExecMode::parallel);

    // Reference implementation: plain insert() fold.
    static Index build_serial(std::span<const Document> corpus);

    static Index from_parts(std::map<std::string, TermRecord, std::less<>> vocabulary,
                            AddressTable addresses, std::string doc_store);

    void insert(std::string_view docid, std::string_view text);

    bool contains(std::string_view docid) const;
    const TermRecord* lookup(std::string_view term) const;
    DocumentAddress resolve_address(std::string_view docid) const;

    // Union of the normalized query terms' postings, scored by summed
    // weights; ties broken by ascending docid.
    std::vector<QueryResult> query(std::span<const std::string> terms) const;

    std::string_view document_text(const DocumentAddress& address) const;

    std::size_t doc_count() const { return addr_.part1.size() + addr_.part2.size(); }
    std::size_t term_count() const { return vocab_.size(); }
    std::size_t posting_count() const;

    const std::map<std::string, TermRecord, std::less<>>& vocabulary() const { return vocab_; }
    const AddressTable& address_table() const { return addr_; }
    const std::string& doc_store() const { return doc_store_; }

    bool operator==(const Index&) const = default;

private:
    struct TokenStats;

    static TokenStats count_tokens(std::string_view text);
    void add_document(std::string_view docid, std::string_view text, const TokenStats& stats);

    std::map<std::string, TermRecord, std::less<>> vocab_;
    AddressTable addr_;
    std::string doc_store_;
};

}  // namespace rlii
