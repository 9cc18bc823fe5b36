#ifndef BOOKSUIT_PREPROCESS_HPP
#define BOOKSUIT_PREPROCESS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "booksuit/resources.hpp"

namespace booksuit {

struct Sentence {
    std::string text;
    std::size_t index = 0;
};

/// Split whitespace-normalized text into sentences. Boundaries sit after
/// `.`, `!` or `?` (plus any closing quotes/brackets) when a space and an
/// uppercase letter or digit follow. A period does not terminate after a
/// known abbreviation or a single-letter initial, and an ellipsis only
/// splits before space + uppercase. Trailing text forms a final sentence.
std::vector<Sentence> split_sentences(std::string_view text, const WordList& abbreviations);

/// Word-level tokens: a letter followed by letters, internal apostrophes or
/// internal hyphens; lowercased. Digits and standalone punctuation vanish.
std::vector<std::string> tokenize_words(std::string_view sentence_text);

/// Order-preserving stopword filter.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const WordList& stopwords);

/// Dictionary-guarded suffix stripper. Irregular forms resolve through the
/// exception table first; the suffix rules (-ies/-sses/-es/-s, then -ing/-ed
/// with silent-e restoration and consonant-doubling undo) only emit a base
/// form the dictionary knows, otherwise the surface is kept. Idempotent.
class Lemmatizer {
public:
    Lemmatizer(const LemmaExceptions& exceptions, const WordList& dictionary)
        : exceptions_(&exceptions), dictionary_(&dictionary) {}

    std::string lemmatize(const std::string& lower_token) const;

    std::vector<std::string> lemmatize_all(const std::vector<std::string>& tokens) const;

private:
    const LemmaExceptions* exceptions_;
    const WordList* dictionary_;
};

} // namespace booksuit

#endif
