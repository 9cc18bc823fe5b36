#include "booksuit/resources.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "booksuit/errors.hpp"
#include "booksuit/text.hpp"

namespace booksuit {
namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ResourceError("cannot open file: " + path.string());
    return in;
}

} // namespace

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    Lexicon lex;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("lexicon line has no tab separator in " + path.string(), lineno);
        const std::string token = to_lower(trim(line.substr(0, tab)));
        if (token.empty())
            throw ParseError("lexicon line has empty token in " + path.string(), lineno);
        const auto next_tab = line.find('\t', tab + 1);
        const std::string value_field =
            trim(line.substr(tab + 1, next_tab == std::string::npos ? std::string::npos
                                                                    : next_tab - tab - 1));
        char* end = nullptr;
        const double valence = std::strtod(value_field.c_str(), &end);
        if (end == value_field.c_str() || *end != '\0' || !std::isfinite(valence))
            throw ParseError("non-numeric valence '" + value_field + "' in " + path.string(),
                             lineno);
        lex.insert(token, valence);
    }
    return lex;
}

void Lexicon::insert(std::string token, double valence) {
    entries_[std::move(token)] = valence; // last wins
}

std::optional<double> Lexicon::valence_of(std::string_view lower_token) const {
    const auto it = entries_.find(std::string(lower_token));
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

bool Lexicon::contains(std::string_view lower_token) const {
    return entries_.count(std::string(lower_token)) > 0;
}

WordList WordList::load(const std::filesystem::path& path, std::string name) {
    std::ifstream in = open_or_throw(path);
    WordList list(std::move(name));
    std::string line;
    while (std::getline(in, line)) {
        const std::string token = trim(line);
        if (token.empty() || token.front() == '#')
            continue;
        list.insert(token);
    }
    return list;
}

void WordList::insert(std::string_view token) {
    const std::string lowered = to_lower(trim(token));
    if (!lowered.empty())
        entries_.insert(lowered);
}

bool WordList::contains(std::string_view token) const {
    return entries_.count(to_lower(token)) > 0;
}

LemmaExceptions load_lemma_exceptions(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    LemmaExceptions table;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const auto tab = stripped.find('\t');
        if (tab == std::string::npos)
            throw ParseError("irregular-lemma line has no tab separator in " + path.string(),
                             lineno);
        const std::string surface = to_lower(trim(stripped.substr(0, tab)));
        const std::string lemma = to_lower(trim(stripped.substr(tab + 1)));
        if (surface.empty() || lemma.empty())
            throw ParseError("irregular-lemma line has empty field in " + path.string(), lineno);
        table[surface] = lemma;
    }
    return table;
}

Resources Resources::load_dir(const std::filesystem::path& dir) {
    Resources r;
    r.lexicon = Lexicon::load(dir / "sentiment_lexicon.txt");
    r.bad_words = WordList::load(dir / "bad_words.txt", "bad-words");
    r.middle_school = WordList::load(dir / "middle_school_words.txt", "middle-school");
    r.high_school = WordList::load(dir / "high_school_words.txt", "high-school");
    r.stopwords = WordList::load(dir / "stopwords.txt", "stopwords");
    r.abbreviations = WordList::load(dir / "abbreviations.txt", "abbreviations");
    r.dictionary = WordList::load(dir / "base_dictionary.txt", "dictionary");
    r.lemma_exceptions = load_lemma_exceptions(dir / "irregular_lemmas.txt");
    return r;
}

} // namespace booksuit
