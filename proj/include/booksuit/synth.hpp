#ifndef BOOKSUIT_SYNTH_HPP
#define BOOKSUIT_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "booksuit/document.hpp"
#include "booksuit/resources.hpp"

namespace booksuit {

/// Controls for the fabricated labeled corpus used in training runs and
/// end-to-end checks where real labeled book texts are unavailable.
struct SynthConfig {
    int count = 416;
    double suitable_fraction = 0.55;
    std::uint64_t seed = 7;
};

/// Fabricate labeled documents from lexicon statistics: suitable books are
/// positive-heavy with occasional mild gloom; unsuitable books mix flagged
/// words, strong negativity and some positive passages. A slice of each
/// class is generated borderline so the classes overlap realistically.
/// Deterministic for a given seed.
std::vector<RawDocument> make_synthetic_corpus(const Resources& resources,
                                               const SynthConfig& config = {});

} // namespace booksuit

#endif
