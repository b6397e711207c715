#pragma once

#include <vector>

#include "vat/verifier.hpp"

namespace vat {

struct CorpusOptions {
    int exhaustive_max_n = 8;   // labelled connected regular graphs, all feasible d
    int family_max_n = 16;      // named regular families
    int random_count = 100;     // seeded random regular samples
    int random_max_n = 18;
    bool include_irregular = true;  // stars and paths
};

// The standard verification corpus, in a fixed order. Ids are FamilySpec
// strings, or "exhaustive:n,d#mask" for enumerated graphs (mask = edge
// subset of K_n).
std::vector<CorpusEntry> standard_corpus(const CorpusOptions& opts = {});

std::vector<CorpusEntry> exhaustive_corpus(int max_n);
std::vector<CorpusEntry> family_corpus(int max_n);
// Connected samples only: a disconnected draw is replaced by the next seed.
std::vector<CorpusEntry> random_regular_corpus(int count, int max_n);
std::vector<CorpusEntry> irregular_corpus();

} // namespace vat
