#ifndef BOOKSUIT_SENTIMENT_HPP
#define BOOKSUIT_SENTIMENT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "booksuit/resources.hpp"

namespace booksuit {

/// Valence of a single lemma on the normalized [-1, 1] scale.
/// `forced` marks the bad-word override, which pins the valence to -1.0.
struct WordScore {
    std::string lemma;
    double valence = 0.0;
    bool forced = false;
};

/// Rule-pipeline score for one sentence. `pos`/`neu`/`neg` are
/// share-of-mass proportions (summing to ~1 when any token was seen) and
/// `compound` is the normalized sum in [-1, 1]. A sentence containing a
/// bad-words entry is forced to compound -1.0 regardless of everything
/// else, so one flagged word cannot be diluted by friendly neighbors.
struct SentenceScore {
    double pos = 0.0;
    double neu = 0.0;
    double neg = 0.0;
    double compound = 0.0;
    bool forced = false;
};

enum class Polarity { Negative = -1, Neutral = 0, Positive = 1 };

/// Compound threshold separating polar sentences from neutral ones.
inline constexpr double kPolarityThreshold = 0.05;

/// Look up one lemma: bad-words override first, then lexicon valence
/// divided by 4 (the raw scale is [-4, +4]) and clamped; unknown -> 0.
WordScore score_word(const std::string& lemma, const Lexicon& lexicon,
                     const WordList& bad_words);

/// Score a raw (untokenized, unfiltered) sentence with the lexicon-and-rules
/// pipeline of Hutto & Gilbert's VADER model: ALL-CAPS emphasis, degree
/// modifiers with distance decay, negation within a three-token window,
/// "but" reweighting, and `!`/`?` amplification, normalized by
/// s / sqrt(s^2 + 15). Emoji and idiom special cases are not implemented.
/// The bad-word override is applied after scoring.
SentenceScore score_sentence(std::string_view sentence_text, const Lexicon& lexicon,
                             const WordList& bad_words);

Polarity classify_polarity(double compound, double threshold = kPolarityThreshold);

/// Whitespace-split tokens with outer ASCII punctuation stripped unless the
/// stripped core is two characters or fewer (which keeps emoticon-like and
/// initial-like tokens intact). This is the token stream the sentence
/// scorer and the bad-word override inspect.
std::vector<std::string> rule_tokens(std::string_view text);

} // namespace booksuit

#endif
