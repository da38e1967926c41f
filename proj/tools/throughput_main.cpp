// Compares the serial reference kernels against their OpenMP counterparts:
// bench-row computation over a docid batch and corpus token counting during
// index build. Also reports address-table lookup timings (informational).
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rlii/bench.hpp"
#include "rlii/index.hpp"
#include "rlii/parallel.hpp"
#include "rlii/run_codec.hpp"

using namespace rlii;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> make_docids(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> len_dist(1, 19);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> first(1, 9);
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<std::string> docids;
    docids.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        int len = len_dist(gen);
        std::string d;
        d.push_back(static_cast<char>('0' + first(gen)));
        while (static_cast<int>(d.size()) < len) {
            if (i % 2 == 0 && coin(gen) != 0)
                d.push_back(d.back());
            else
                d.push_back(static_cast<char>('0' + digit(gen)));
        }
        docids.push_back(std::move(d));
    }
    return docids;
}

std::vector<Document> make_corpus(std::size_t docs, std::size_t tokens_per_doc,
                                  std::uint64_t seed) {
    static const char* pool[] = {"alpha", "bravo", "charlie", "delta", "echo",  "foxtrot",
                                 "golf",  "hotel", "india",   "juliet", "kilo", "lima",
                                 "mike",  "nov",   "oscar",   "papa",  "quebec", "romeo"};
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
    std::vector<Document> corpus;
    corpus.reserve(docs);
    for (std::size_t d = 0; d < docs; ++d) {
        std::string text;
        for (std::size_t t = 0; t < tokens_per_doc; ++t) {
            text += pool[pick(gen)];
            text += ' ';
        }
        corpus.push_back({std::to_string(d + 1), std::move(text)});
    }
    return corpus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel timings"};
    std::size_t rows = 500'000;
    std::size_t docs = 5'000;
    std::size_t tokens = 120;
    std::uint64_t seed = 42;
    app.add_option("--rows", rows, "docids in the bench batch");
    app.add_option("--docs", docs, "documents in the synthetic corpus");
    app.add_option("--tokens", tokens, "tokens per document");
    app.add_option("--seed", seed, "generator seed");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n\n", hardware_threads());

    {
        std::vector<std::string> docids = make_docids(rows, seed);
        auto t0 = Clock::now();
        BenchReport serial = bench_table(docids, ExecMode::serial);
        double t_serial = seconds(t0);
        t0 = Clock::now();
        BenchReport parallel = bench_table(docids, ExecMode::parallel);
        double t_parallel = seconds(t0);
        std::printf("bench rows (%zu docids)\n", rows);
        std::printf("  serial:   %8.1f ms\n", t_serial * 1e3);
        std::printf("  parallel: %8.1f ms   speedup %.2fx   reports match: %s\n\n",
                    t_parallel * 1e3, t_serial / t_parallel,
                    serial == parallel ? "yes" : "NO");
        if (!(serial == parallel)) return 1;
    }

    Index built;
    std::vector<Document> corpus = make_corpus(docs, tokens, seed);
    {
        auto t0 = Clock::now();
        Index serial = Index::build(corpus, ExecMode::serial);
        double t_serial = seconds(t0);
        t0 = Clock::now();
        built = Index::build(corpus, ExecMode::parallel);
        double t_parallel = seconds(t0);
        std::printf("index build (%zu docs x %zu tokens)\n", docs, tokens);
        std::printf("  serial:   %8.1f ms\n", t_serial * 1e3);
        std::printf("  parallel: %8.1f ms   speedup %.2fx   indexes match: %s\n\n",
                    t_parallel * 1e3, t_serial / t_parallel,
                    serial == built ? "yes" : "NO");
        if (!(serial == built)) return 1;
    }

    {
        auto t0 = Clock::now();
        std::size_t checksum = 0;
        for (const Document& doc : corpus) checksum += built.resolve_address(doc.docid).length;
        double t_lookup = seconds(t0);
        std::printf("address lookups (informational)\n");
        std::printf("  %zu lookups in %.1f ms (%.0f ns each, checksum %zu)\n", corpus.size(),
                    t_lookup * 1e3, t_lookup * 1e9 / static_cast<double>(corpus.size()),
                    checksum);
    }
    return 0;
}
