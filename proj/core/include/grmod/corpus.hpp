#pragma once

#include "grmod/input.hpp"

namespace grmod {

/* The built-in verification corpus: a dozen small ideals in 2..5 variables
 * covering regular sequences, determinantal and Gorenstein ideals, the
 * standard rational curves, and degenerate shapes (zero ideal, residue
 * field, non-equidimensional, Artinian non-Gorenstein). Shipped in the CLI
 * input format so the same text drives both the library tests and the
 * command line. */

struct CorpusEntry {
    std::string name;
    Ring ring;
    std::vector<Polynomial> ideal_gens;
    bool genus0_curve = false;
};

const std::string& builtin_corpus_text();
std::vector<CorpusEntry> builtin_corpus();

/* a parsed input document reinterpreted as corpus entries */
std::vector<CorpusEntry> corpus_from_document(const InputDocument& doc);

}  // namespace grmod
