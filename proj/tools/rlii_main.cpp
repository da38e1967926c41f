#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rlii/bench.hpp"
#include "rlii/error.hpp"
#include "rlii/index.hpp"
#include "rlii/run_codec.hpp"
#include "rlii/storage.hpp"

namespace {

using namespace rlii;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

const char* codec_name(CodecKind kind) {
    switch (kind) {
        case CodecKind::binary_fixed: return "binary";
        case CodecKind::gamma: return "gamma";
        case CodecKind::digit_run_nibble: return "rle";
    }
    return "?";
}

CodecKind codec_from_name(const std::string& name) {
    if (name == "binary") return CodecKind::binary_fixed;
    if (name == "gamma") return CodecKind::gamma;
    return CodecKind::digit_run_nibble;
}

void run_encode(const std::string& docid) {
    std::string symbols = compress_docid(docid);
    std::string bits = vlq_bits(symbols);
    std::cout << "symbols=" << symbols << " vlq_bits=" << bits << " nbits=" << bits.size()
              << '\n';
}

void run_decode(const std::string& symbols) {
    std::cout << decompress_docid(symbols) << '\n';
}

void run_build(const std::string& corpus_path, const std::string& mode,
               const std::string& codec, bool dgap, const std::string& output) {
    CorpusMode corpus_mode = mode == "dir" ? CorpusMode::dir : CorpusMode::tsv;
    std::vector<Document> corpus = ingest_corpus(corpus_path, corpus_mode);
    Index index = Index::build(corpus);
    CodecConfig config{codec_from_name(codec), dgap};
    std::size_t written = write_index(index, config, output);
    IndexFileInfo info = inspect_index(output);
    std::cout << "documents=" << index.doc_count() << " terms=" << index.term_count()
              << " postings=" << index.posting_count() << " postings_bytes="
              << info.sections[static_cast<std::size_t>(Section::postings)].length
              << " addr_part1=" << info.part1_count << " addr_part2=" << info.part2_count
              << " total_bytes=" << written << '\n';
}

void run_search(const std::string& index_path, const std::vector<std::string>& terms) {
    Index index = read_index(index_path);
    std::vector<QueryResult> results = index.query(terms);
    if (results.empty()) {
        std::cout << "no results\n";
        return;
    }
    int rank = 0;
    for (const QueryResult& result : results) {
        std::string docid = std::to_string(result.docid);
        DocumentAddress address = index.resolve_address(docid);
        const char* part = is_compressible(docid) ? "part2" : "part1";
        std::cout << ++rank << "  " << docid << "  score=" << result.score << "  " << part
                  << "  offset=" << address.offset << "  length=" << address.length << '\n';
    }
}

std::vector<std::string> read_docid_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorpusError("cannot open docid list '" + path + "'");
    std::vector<std::string> docids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!is_valid_docid(line))
            throw CorpusError("line " + std::to_string(line_no) +
                              ": invalid document number '" + line + "'");
        docids.push_back(line);
    }
    return docids;
}

void run_bench(const std::string& docids_path, bool paper_fixture, const std::string& csv_path) {
    BenchReport report;
    std::vector<std::string> discrepancies;
    if (paper_fixture) {
        FixtureOutcome outcome = fixture_report();
        report = std::move(outcome.report);
        discrepancies = std::move(outcome.discrepancies);
    } else {
        std::vector<std::string> docids = read_docid_lines(docids_path);
        if (docids.empty()) throw UsageError("docid list is empty");
        report = bench_table(docids);
    }
    std::cout << render_table(report);
    for (const std::string& line : discrepancies) std::cout << "discrepancy: " << line << '\n';
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::trunc);
        if (!out) throw CorpusError("cannot write CSV '" + csv_path + "'");
        write_csv(report, out);
    }
}

void run_stats(const std::string& index_path) {
    IndexFileInfo info = inspect_index(index_path);
    std::cout << "version=" << info.version << " codec=" << codec_name(info.codec.kind)
              << " dgap=" << (info.codec.gap_transform ? "on" : "off");
    if (info.codec.kind == CodecKind::binary_fixed)
        std::cout << " binary_width=" << static_cast<int>(info.binary_width);
    std::cout << '\n';
    std::cout << "documents=" << info.doc_count() << " terms=" << info.term_count
              << " addr_part1=" << info.part1_count << " addr_part2=" << info.part2_count
              << '\n';
    static const char* names[] = {"vocabulary", "postings", "addr_part1", "addr_part2",
                                  "doc_store"};
    for (std::size_t i = 0; i < kSectionCount; ++i)
        std::cout << "section " << names[i] << ": offset=" << info.sections[i].offset
                  << " bytes=" << info.sections[i].length << '\n';
    std::cout << "file_bytes=" << info.file_bytes << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compressed inverted index with a digit-run document-number codec"};
    app.require_subcommand(1);

    std::string docid;
    auto* encode = app.add_subcommand("encode", "compress one document number");
    encode->add_option("docid", docid, "decimal document number")->required();

    std::string symbols;
    auto* decode = app.add_subcommand("decode", "expand one compressed document number");
    decode->add_option("symbols", symbols, "symbol string such as 2A3")->required();

    std::string corpus_path;
    std::string output_path;
    std::string mode = "tsv";
    std::string codec = "rle";
    bool dgap = false;
    auto* build = app.add_subcommand("build", "build an index file from a corpus");
    build->add_option("corpus", corpus_path, "corpus file or directory")->required();
    build->add_option("output", output_path, "index file to write")->required();
    build->add_option("--mode", mode, "corpus layout")->check(CLI::IsMember({"tsv", "dir"}));
    build->add_option("--codec", codec, "posting-list codec")
        ->check(CLI::IsMember({"binary", "gamma", "rle"}));
    build->add_flag("--dgap", dgap, "d-gap transform docids before encoding");

    std::string index_path;
    std::vector<std::string> terms;
    auto* search = app.add_subcommand("search", "query an index file");
    search->add_option("index", index_path, "index file")->required();
    search->add_option("terms", terms, "query terms")->required();

    std::string docids_path;
    std::string csv_path;
    bool paper_fixture = false;
    auto* bench = app.add_subcommand("bench", "per-docid codec size comparison");
    bench->add_option("docids", docids_path, "file with one document number per line");
    bench->add_flag("--paper-fixture", paper_fixture,
                    "run the built-in reference fixture and print its discrepancy log");
    bench->add_option("--csv", csv_path, "also write the rows as CSV");

    std::string stats_path;
    auto* stats = app.add_subcommand("stats", "describe an index file");
    stats->add_option("index", stats_path, "index file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*encode) {
            run_encode(docid);
        } else if (*decode) {
            run_decode(symbols);
        } else if (*build) {
            run_build(corpus_path, mode, codec, dgap, output_path);
        } else if (*search) {
            run_search(index_path, terms);
        } else if (*bench) {
            if (!paper_fixture && docids_path.empty())
                throw UsageError("bench needs a docid list or --paper-fixture");
            if (paper_fixture && !docids_path.empty())
                throw UsageError("--paper-fixture does not take a docid list");
            run_bench(docids_path, paper_fixture, csv_path);
        } else if (*stats) {
            run_stats(stats_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}
