#include "rlii/index.hpp"

#include <algorithm>
#include <unordered_map>

#include "rlii/error.hpp"
#include "rlii/run_codec.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace rlii {

namespace {

bool is_token_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || (u >= '0' && u <= '9');
}

char lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_token_char(c)) {
            current.push_back(lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int compute_weight(std::uint32_t tf, std::uint32_t max_tf) {
    if (tf == 0 || max_tf == 0) throw CodecError("term frequency must be >= 1");
    if (tf > max_tf) throw CodecError("term frequency exceeds the document maximum");
    // round(100 * tf / max_tf) in integer arithmetic, half away from zero
    std::uint64_t scaled = 200ull * tf + max_tf;
    return static_cast<int>(scaled / (2ull * max_tf));
}

struct Index::TokenStats {
    std::unordered_map<std::string, std::uint32_t> counts;
    std::uint32_t max_tf = 0;
};

Index::TokenStats Index::count_tokens(std::string_view text) {
    TokenStats stats;
    for (std::string& token : tokenize(text)) {
        std::uint32_t& tf = stats.counts[std::move(token)];
        ++tf;
        stats.max_tf = std::max(stats.max_tf, tf);
    }
    return stats;
}

void Index::add_document(std::string_view docid, std::string_view text, const TokenStats& stats) {
    std::uint64_t id = parse_docid(docid);
    if (contains(docid))
        throw IndexError(IndexError::Kind::duplicate_doc,
                         "duplicate document number '" + std::string(docid) + "'");

    DocumentAddress address{0, doc_store_.size(), text.size()};
    doc_store_.append(text);
    if (is_compressible(docid))
        addr_.part2.emplace(compress_docid(docid), address);
    else
        addr_.part1.emplace(id, address);

    for (const auto& [token, tf] : stats.counts) {
        auto [it, created] = vocab_.try_emplace(token);
        TermRecord& record = it->second;
        if (created) record.term = token;
        Posting posting{id, static_cast<std::uint8_t>(compute_weight(tf, stats.max_tf))};
        auto pos = std::lower_bound(record.postings.begin(), record.postings.end(), posting,
                                    [](const Posting& a, const Posting& b) { return a.docid < b.docid; });
        record.postings.insert(pos, posting);
    }
}

void Index::insert(std::string_view docid, std::string_view text) {
    add_document(docid, text, count_tokens(text));
}

Index Index::build(std::span<const Document> corpus, ExecMode mode) {
    for (const Document& doc : corpus) validate_docid(doc.docid);

    std::vector<TokenStats> stats(corpus.size());
    std::int64_t n = static_cast<std::int64_t>(corpus.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (mode == ExecMode::parallel)
#endif
    for (std::int64_t i = 0; i < n; ++i) stats[i] = count_tokens(corpus[i].text);
    (void)mode;

    Index index;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        index.add_document(corpus[i].docid, corpus[i].text, stats[i]);
    return index;
}

Index Index::build_serial(std::span<const Document> corpus) {
    Index index;
    for (const Document& doc : corpus) index.insert(doc.docid, doc.text);
    return index;
}

Index Index::from_parts(std::map<std::string, TermRecord, std::less<>> vocabulary,
                        AddressTable addresses, std::string doc_store) {
    Index index;
    index.vocab_ = std::move(vocabulary);
    index.addr_ = std::move(addresses);
    index.doc_store_ = std::move(doc_store);
    return index;
}

bool Index::contains(std::string_view docid) const {
    if (!is_valid_docid(docid)) return false;
    if (is_compressible(docid)) return addr_.part2.contains(compress_docid(docid));
    return addr_.part1.contains(parse_docid(docid));
}

const TermRecord* Index::lookup(std::string_view term) const {
    std::vector<std::string> normalized = tokenize(term);
    if (normalized.size() != 1) return nullptr;
    auto it = vocab_.find(normalized.front());
    return it == vocab_.end() ? nullptr : &it->second;
}

DocumentAddress Index::resolve_address(std::string_view docid) const {
    validate_docid(docid);
    if (is_compressible(docid)) {
        auto it = addr_.part2.find(compress_docid(docid));
        if (it != addr_.part2.end()) return it->second;
    } else {
        auto it = addr_.part1.find(parse_docid(docid));
        if (it != addr_.part1.end()) return it->second;
    }
    throw IndexError(IndexError::Kind::not_found,
                     "document number '" + std::string(docid) + "' is not in the index");
}

std::vector<QueryResult> Index::query(std::span<const std::string> terms) const {
    if (terms.empty()) throw UsageError("query needs at least one term");

    std::vector<std::string> tokens;
    for (const std::string& term : terms)
        for (std::string& token : tokenize(term)) tokens.push_back(std::move(token));
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());

    std::unordered_map<std::uint64_t, int> scores;
    for (const std::string& token : tokens) {
        auto it = vocab_.find(token);
        if (it == vocab_.end()) continue;
        for (const Posting& posting : it->second.postings) scores[posting.docid] += posting.weight;
    }

    std::vector<QueryResult> results;
    results.reserve(scores.size());
    for (const auto& [docid, score] : scores) results.push_back({docid, score});
    std::sort(results.begin(), results.end(), [](const QueryResult& a, const QueryResult& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.docid < b.docid;
    });
    return results;
}

std::string_view Index::document_text(const DocumentAddress& address) const {
    if (address.file_id != 0 || address.offset + address.length > doc_store_.size())
        throw IndexError(IndexError::Kind::not_found, "document address is out of range");
    return std::string_view(doc_store_).substr(address.offset, address.length);
}

std::size_t Index::posting_count() const {
    std::size_t total = 0;
    for (const auto& [term, record] : vocab_) total += record.postings.size();
    return total;
}

}  // namespace rlii
