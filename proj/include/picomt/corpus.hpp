#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "picomt/common.hpp"

namespace picomt {

// Line-oriented sentence store. Sentences are whitespace-normalized
// (trimmed, internal space runs collapsed), never empty and never contain
// a line break; order is stable under save/load.
struct Corpus {
    std::string lang;
    std::vector<std::string> sentences;

    std::size_t size() const { return sentences.size(); }
    bool empty() const { return sentences.empty(); }
};

struct ParallelCorpus {
    std::string src_lang;
    std::string tgt_lang;
    std::vector<std::pair<std::string, std::string>> pairs;

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }

    Corpus source_side() const;
    Corpus target_side() const;
};

// Reads one sentence per line, dropping blank lines and trimming/collapsing
// whitespace. Throws IoError for unreadable files or invalid UTF-8 (the
// error names the byte offset).
Corpus ingest(const std::string& path, const std::string& lang);

Corpus corpus_from_lines(std::vector<std::string> lines, const std::string& lang);

void save_corpus(const Corpus& c, const std::string& path);

// Parallel corpora live as two aligned files "<base>.<src>" / "<base>.<tgt>".
ParallelCorpus load_parallel(const std::string& base, const std::string& src_lang, const std::string& tgt_lang);
void save_parallel(const ParallelCorpus& c, const std::string& base);

struct PairReport {
    ParallelCorpus corpus;
    std::size_t dropped = 0;  // pairs removed because the translation was empty
};

// Positional pairing of a corpus with its translations. Pairs whose
// translation side is empty are dropped and counted. Lengths must match.
PairReport pair_synthetic(const Corpus& source, const Corpus& translations);

// Deterministic disjoint split into train/dev/test. Selection uses a seeded
// shuffle of indices; each part keeps the original corpus order.
std::tuple<ParallelCorpus, ParallelCorpus, ParallelCorpus> split(const ParallelCorpus& c, std::size_t dev_n,
                                                                 std::size_t test_n, std::uint64_t seed);

}  // namespace picomt
