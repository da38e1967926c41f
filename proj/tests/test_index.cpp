#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rlii/error.hpp"
#include "rlii/index.hpp"
#include "rlii/run_codec.hpp"
#include "rlii/storage.hpp"

using namespace rlii;

namespace {

std::filesystem::path data_dir() { return std::filesystem::path(RLII_TEST_DATA_DIR); }

std::vector<Document> table1() {
    return ingest_corpus(data_dir() / "table1.tsv", CorpusMode::tsv);
}

std::vector<Document> table1_weighted() {
    return ingest_corpus(data_dir() / "table1_weighted.tsv", CorpusMode::tsv);
}

// Brute-force scan oracle: tokenizes every document per query, scores with
// its own arithmetic and sorts independently of the index path.
std::vector<QueryResult> scan_oracle(const std::vector<Document>& corpus,
                                     const std::vector<std::string>& terms) {
    std::vector<std::string> tokens;
    for (const std::string& term : terms)
        for (const std::string& token : tokenize(term)) tokens.push_back(token);
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());

    std::vector<QueryResult> results;
    for (const Document& doc : corpus) {
        std::map<std::string, int> counts;
        int max_tf = 0;
        for (const std::string& token : tokenize(doc.text))
            max_tf = std::max(max_tf, ++counts[token]);
        long score = 0;
        bool hit = false;
        for (const std::string& token : tokens) {
            auto it = counts.find(token);
            if (it == counts.end()) continue;
            hit = true;
            score += (200L * it->second + max_tf) / (2L * max_tf);
        }
        if (hit) results.push_back({parse_docid(doc.docid), static_cast<int>(score)});
    }
    std::stable_sort(results.begin(), results.end(), [](const QueryResult& a, const QueryResult& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.docid < b.docid;
    });
    return results;
}

std::vector<Document> random_corpus(std::mt19937& gen, int max_docs, int max_tokens) {
    static const char* pool[] = {"alpha", "beta", "gamma", "delta", "epsilon", "zeta",
                                 "eta",   "theta", "iota", "kappa", "lambda",  "mu"};
    std::uniform_int_distribution<int> ndocs(1, max_docs);
    std::uniform_int_distribution<int> ntok(0, max_tokens);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
    std::uniform_int_distribution<std::uint64_t> id(1, 4'000'000'000ull);
    std::uniform_int_distribution<int> runny(0, 4);

    std::vector<Document> corpus;
    std::set<std::string> used;
    int docs = ndocs(gen);
    for (int d = 0; d < docs; ++d) {
        std::string docid;
        do {
            if (runny(gen) == 0) {
                std::string repeated(6, static_cast<char>('1' + d % 9));
                docid = repeated + std::to_string(id(gen) % 100);
            } else {
                docid = std::to_string(id(gen));
            }
        } while (!used.insert(docid).second);
        std::string text;
        int tokens = ntok(gen);
        for (int t = 0; t < tokens; ++t) {
            text += pool[pick(gen)];
            text += ' ';
        }
        corpus.push_back({std::move(docid), std::move(text)});
    }
    return corpus;
}

}  // namespace

TEST_SUITE("tokenize") {
    TEST_CASE("lowercases and splits on non-alphanumerics") {
        CHECK(tokenize("Hello, World! hello") ==
              std::vector<std::string>{"hello", "world", "hello"});
        CHECK(tokenize("a-b_c9") == std::vector<std::string>{"a", "b", "c9"});
        CHECK(tokenize("...") == std::vector<std::string>{});
        CHECK(tokenize("") == std::vector<std::string>{});
    }
}

TEST_SUITE("compute_weight") {
    TEST_CASE("scaled term frequency") {
        CHECK(compute_weight(3, 3) == 100);
        CHECK(compute_weight(1, 2) == 50);
        CHECK(compute_weight(1, 3) == 33);
        CHECK(compute_weight(2, 3) == 67);
        CHECK_THROWS_AS(compute_weight(0, 3), CodecError);
    }

    TEST_CASE("monotone nondecreasing in tf") {
        for (std::uint32_t max_tf = 1; max_tf <= 50; ++max_tf) {
            int previous = 0;
            for (std::uint32_t tf = 1; tf <= max_tf; ++tf) {
                int w = compute_weight(tf, max_tf);
                CHECK(w >= previous);
                CHECK(w >= 0);
                CHECK(w <= 100);
                previous = w;
            }
            CHECK(compute_weight(max_tf, max_tf) == 100);
        }
    }
}

TEST_SUITE("index build and lookup") {
    TEST_CASE("table fixture: posting sets per term") {
        Index index = Index::build(table1());
        CHECK(index.term_count() == 8);
        CHECK(index.doc_count() == 24);

        const TermRecord* cse = index.lookup("cse");
        REQUIRE(cse != nullptr);
        std::vector<std::uint64_t> docids;
        for (const Posting& p : cse->postings) docids.push_back(p.docid);
        CHECK(docids == std::vector<std::uint64_t>{20, 58, 222223, 1111111});

        CHECK(index.lookup("CSE") == cse);  // normalization
        CHECK(index.lookup("missing") == nullptr);
    }

    TEST_CASE("weighted fixture reproduces the recorded weights") {
        Index index = Index::build(table1_weighted());
        const TermRecord* bge = index.lookup("BGE");
        REQUIRE(bge != nullptr);
        REQUIRE(bge->postings.size() == 2);
        CHECK(bge->postings[0] == Posting{12, 60});
        CHECK(bge->postings[1] == Posting{5555555, 80});

        auto results = index.query(std::vector<std::string>{"cse"});
        REQUIRE(results.size() == 4);
        CHECK(results[0] == QueryResult{20, 80});
        CHECK(results[1] == QueryResult{58, 70});
        CHECK(results[2] == QueryResult{222223, 50});
        CHECK(results[3] == QueryResult{1111111, 30});
    }

    TEST_CASE("every indexed token is found and lists stay sorted") {
        std::mt19937 gen(5);
        auto corpus = random_corpus(gen, 40, 60);
        Index index = Index::build(corpus);
        for (const Document& doc : corpus)
            for (const std::string& token : tokenize(doc.text)) {
                const TermRecord* record = index.lookup(token);
                REQUIRE(record != nullptr);
                bool found = std::any_of(record->postings.begin(), record->postings.end(),
                                         [&](const Posting& p) { return p.docid == parse_docid(doc.docid); });
                CHECK(found);
            }
        for (const auto& [term, record] : index.vocabulary())
            for (std::size_t i = 1; i < record.postings.size(); ++i)
                CHECK(record.postings[i - 1].docid < record.postings[i].docid);
    }

    TEST_CASE("posting lists are independent of insertion order") {
        std::mt19937 gen(33);
        auto corpus = random_corpus(gen, 25, 30);
        Index forward = Index::build(corpus);
        std::shuffle(corpus.begin(), corpus.end(), gen);
        Index shuffled = Index::build(corpus);
        CHECK(forward.vocabulary() == shuffled.vocabulary());
    }

    TEST_CASE("empty corpus and duplicate docids") {
        CHECK(Index::build(std::vector<Document>{}) == Index{});
        std::vector<Document> corpus{{"5", "a"}, {"5", "b"}};
        CHECK_THROWS_AS(Index::build(corpus), IndexError);
    }
}

TEST_SUITE("insert") {
    TEST_CASE("pen gains posting 12") {
        std::vector<Document> corpus = table1();
        corpus.erase(std::remove_if(corpus.begin(), corpus.end(),
                                    [](const Document& d) { return d.docid == "12"; }),
                     corpus.end());
        Index index = Index::build(corpus);
        index.insert("12", "BGE pen");
        const TermRecord* pen = index.lookup("pen");
        REQUIRE(pen != nullptr);
        bool found = std::any_of(pen->postings.begin(), pen->postings.end(),
                                 [](const Posting& p) { return p.docid == 12; });
        CHECK(found);
    }

    TEST_CASE("empty text only touches the address table") {
        Index index;
        index.insert("7", "");
        CHECK(index.term_count() == 0);
        CHECK(index.doc_count() == 1);
        CHECK_NOTHROW(index.resolve_address("7"));
        CHECK_THROWS_AS(index.insert("7", "again"), IndexError);
    }

    TEST_CASE("build equals insert-fold on random corpora") {
        std::mt19937 gen(9);
        for (int round = 0; round < 20; ++round) {
            auto corpus = random_corpus(gen, 30, 40);
            Index parallel_built = Index::build(corpus, ExecMode::parallel);
            Index serial_built = Index::build_serial(corpus);
            CHECK(parallel_built == serial_built);

            // incremental insert of the tail equals the full build
            if (corpus.size() > 1) {
                std::vector<Document> head(corpus.begin(), corpus.end() - 1);
                Index incremental = Index::build(head);
                incremental.insert(corpus.back().docid, corpus.back().text);
                CHECK(incremental == parallel_built);
            }
        }
    }
}

TEST_SUITE("address routing") {
    TEST_CASE("boundary pair 11111/11112") {
        Index index;
        index.insert("11111", "compressible text");
        index.insert("11112", "plain text");
        CHECK(index.address_table().part2.contains("1A"));
        CHECK(index.address_table().part1.contains(11112));
        CHECK_FALSE(index.address_table().part1.contains(11111));
        CHECK(index.document_text(index.resolve_address("11111")) == "compressible text");
        CHECK(index.document_text(index.resolve_address("11112")) == "plain text");
        CHECK_THROWS_AS(index.resolve_address("11113"), IndexError);
    }

    TEST_CASE("partition is exclusive and exhaustive") {
        std::mt19937 gen(13);
        auto corpus = random_corpus(gen, 60, 10);
        Index index = Index::build(corpus);
        CHECK(index.doc_count() == corpus.size());
        for (const Document& doc : corpus) {
            bool in_part1 = index.address_table().part1.contains(parse_docid(doc.docid));
            bool in_part2 = index.address_table().part2.contains(compress_docid(doc.docid));
            CHECK(in_part1 != in_part2);
            CHECK(in_part2 == is_compressible(doc.docid));
            CHECK(index.document_text(index.resolve_address(doc.docid)) == doc.text);
        }
    }
}

TEST_SUITE("query") {
    TEST_CASE("empty and absent terms") {
        Index index = Index::build(table1());
        CHECK_THROWS_AS(index.query(std::vector<std::string>{}), UsageError);
        CHECK(index.query(std::vector<std::string>{"absent"}).empty());
    }

    TEST_CASE("matches the scan oracle on random corpora") {
        std::mt19937 gen(21);
        static const std::vector<std::vector<std::string>> queries = {
            {"alpha"}, {"beta", "gamma"}, {"delta", "absent"}, {"Kappa", "MU", "iota"}};
        for (int round = 0; round < 25; ++round) {
            auto corpus = random_corpus(gen, 50, 80);
            Index index = Index::build(corpus);
            for (const auto& terms : queries) {
                CAPTURE(round);
                CHECK(index.query(terms) == scan_oracle(corpus, terms));
            }
        }
    }
}
