#include "booksuit/preprocess.hpp"

#include <algorithm>
#include <cctype>

#include "booksuit/text.hpp"

namespace booksuit {
namespace {

bool is_terminator(char ch) {
    return ch == '.' || ch == '!' || ch == '?';
}

// Closing quotes/brackets that may trail a terminator: ASCII plus the
// typographic closers found in book texts.
bool is_closer(std::string_view s, std::size_t i, std::size_t& len) {
    const char ch = s[i];
    if (ch == '"' || ch == '\'' || ch == ')' || ch == ']') {
        len = 1;
        return true;
    }
    std::size_t j = i;
    const char32_t cp = decode_utf8(s, j);
    if (cp == 0x201D || cp == 0x2019 || cp == 0x00BB) { // ” ’ »
        len = j - i;
        return true;
    }
    return false;
}

// The letter run immediately before position `dot`, lowercased.
std::string word_before(std::string_view s, std::size_t dot) {
    std::size_t b = dot;
    while (b > 0 && std::isalpha(static_cast<unsigned char>(s[b - 1])))
        --b;
    return to_lower(s.substr(b, dot - b));
}

} // namespace

std::vector<Sentence> split_sentences(std::string_view text, const WordList& abbreviations) {
    std::vector<Sentence> sentences;
    auto emit = [&](std::size_t begin, std::size_t end) {
        while (begin < end && text[begin] == ' ')
            ++begin;
        while (end > begin && text[end - 1] == ' ')
            --end;
        if (end > begin)
            sentences.push_back({std::string(text.substr(begin, end - begin)), sentences.size()});
    };

    std::size_t start = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_terminator(text[i])) {
            ++i;
            continue;
        }
        // swallow the whole terminator cluster ("...", "?!", "!!")
        const std::size_t term_begin = i;
        std::size_t dots = 0;
        bool has_bang = false;
        while (i < text.size() && is_terminator(text[i])) {
            if (text[i] == '.')
                ++dots;
            else
                has_bang = true;
            ++i;
        }
        std::size_t closer_len = 0;
        while (i < text.size() && is_closer(text, i, closer_len))
            i += closer_len;

        // boundary requires: space, then an uppercase letter or digit
        // (ellipses insist on the uppercase letter)
        if (i >= text.size() || text[i] != ' ' || i + 1 >= text.size())
            continue;
        const char next = text[i + 1];
        const bool ellipsis = dots >= 2 && !has_bang;
        const bool next_ok =
            ellipsis ? is_ascii_upper(next) : (is_ascii_upper(next) || is_ascii_digit(next));
        if (!next_ok)
            continue;

        if (dots == 1 && !has_bang) {
            const std::string before = word_before(text, term_begin);
            const bool initial = before.size() == 1 && is_ascii_upper(text[term_begin - 1]);
            if (initial || (!before.empty() && abbreviations.contains(before)))
                continue;
        }

        emit(start, i);
        start = i + 1;
        ++i;
    }
    emit(start, text.size());
    return sentences;
}

std::vector<std::string> tokenize_words(std::string_view sentence_text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    bool pending_joiner = false; // apostrophe/hyphen seen, needs a letter next
    std::string joiner;

    auto flush = [&] {
        if (!current.empty())
            tokens.push_back(current);
        current.clear();
        pending_joiner = false;
        joiner.clear();
    };

    while (i < sentence_text.size()) {
        const char32_t cp = decode_utf8(sentence_text, i);
        if (is_word_letter(cp)) {
            if (pending_joiner) {
                current += joiner;
                pending_joiner = false;
                joiner.clear();
            }
            append_utf8(current, to_lower_cp(cp));
        } else if (!current.empty() && !pending_joiner &&
                   (cp == U'\'' || cp == 0x2019 || cp == U'-')) {
            // internal only: kept when a letter follows; curly apostrophes
            // normalize to ASCII so lookups are spelling-insensitive
            pending_joiner = true;
            joiner = cp == U'-' ? "-" : "'";
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const WordList& stopwords) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const std::string& t : tokens)
        if (!stopwords.contains(t))
            kept.push_back(t);
    return kept;
}

namespace {

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

} // namespace

std::string Lemmatizer::lemmatize(const std::string& w) const {
    const auto ex = exceptions_->find(w);
    if (ex != exceptions_->end())
        return ex->second;

    const std::size_t n = w.size();
    const auto known = [&](const std::string& c) { return dictionary_->contains(c); };

    // noun rules first
    if (n >= 5 && ends_with(w, "ies"))
        return w.substr(0, n - 3) + "y";
    if (n >= 5 && ends_with(w, "sses"))
        return w.substr(0, n - 2);
    if (!ends_with(w, "ss") && !ends_with(w, "us") && n >= 4 && w.back() == 's') {
        if (ends_with(w, "es")) {
            const std::string c = w.substr(0, n - 2);
            if (c.size() >= 3 && known(c))
                return c;
        }
        return w.substr(0, n - 1);
    }

    // verb rules, skipped when the surface is already a dictionary base form
    if (!known(w)) {
        if (n >= 6 && ends_with(w, "ing")) {
            const std::string stem = w.substr(0, n - 3);
            if (known(stem + "e"))
                return stem + "e"; // hoping -> hope
            if (known(stem))
                return stem; // jumping -> jump
            if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2] &&
                !is_vowel(stem.back())) {
                const std::string undoubled = stem.substr(0, stem.size() - 1);
                if (known(undoubled))
                    return undoubled; // running -> run
            }
        } else if (n >= 4 && ends_with(w, "ed")) {
            const std::string restored = w.substr(0, n - 1);
            if (known(restored))
                return restored; // hoped -> hope
            const std::string stem = w.substr(0, n - 2);
            if (known(stem))
                return stem; // jumped -> jump
            if (stem.size() >= 2 && stem.back() == stem[stem.size() - 2] &&
                !is_vowel(stem.back())) {
                const std::string undoubled = stem.substr(0, stem.size() - 1);
                if (known(undoubled))
                    return undoubled; // planned -> plan
            }
        }
    }
    return w;
}

std::vector<std::string> Lemmatizer::lemmatize_all(const std::vector<std::string>& tokens) const {
    std::vector<std::string> lemmas;
    lemmas.reserve(tokens.size());
    for (const std::string& t : tokens)
        lemmas.push_back(lemmatize(t));
    return lemmas;
}

} // namespace booksuit
