#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "tptl/formula.hpp"
#include "tptl/mitl.hpp"
#include "tptl/timed_word.hpp"

namespace tptl {

// ============================================================================
// Seeded random corpora
// ============================================================================

using Rng = std::mt19937_64;

struct FormulaGenOptions {
    std::size_t max_size = 12;
    std::vector<std::string> clocks{"x", "y"};
    std::int64_t max_constant = 3;
    std::vector<std::string> atoms{"a", "b", "c"};
    int max_depth = 4;
};

struct WordGenOptions {
    std::size_t min_length = 1;
    std::size_t max_length = 6;
    std::int64_t max_time = 4;
    std::int64_t max_denominator = 4;
};

/// Random closed formula accepted by classify, within the size bound.
Formula random_fragment_formula(Rng& rng, const FormulaGenOptions& opts = {});

/// Random word over letters; timestamps k/d with d <= max_denominator.
TimedWord random_word(Rng& rng, const std::vector<std::string>& letters, const WordGenOptions& opts = {});

/// Letters for words over f: its atoms plus one symbol outside them.
std::vector<std::string> word_letters(const Formula& f);

/// Random MITL formula with non-punctual integer intervals.
MitlFormula random_mitl(Rng& rng, int depth, std::int64_t max_constant, const std::vector<std::string>& atoms);

struct CorpusEntry {
    Formula formula;
    std::vector<TimedWord> words;
};

std::vector<CorpusEntry> fragment_corpus(std::uint64_t seed, std::size_t formulas, std::size_t words_per_formula,
                                         const FormulaGenOptions& fopts = {}, const WordGenOptions& wopts = {});

nlohmann::json corpus_to_json(const std::vector<CorpusEntry>& corpus, std::uint64_t seed);

}  // namespace tptl
