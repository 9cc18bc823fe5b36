#ifndef BOOKSUIT_RESOURCES_HPP
#define BOOKSUIT_RESOURCES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace booksuit {

/// Token -> raw valence map on the source [-4, +4] scale. Keys are stored
/// lowercase; duplicate tokens in the file resolve last-wins.
class Lexicon {
public:
    Lexicon() = default;

    /// Load a TSV file, one `token<TAB>valence` entry per line. Lines whose
    /// first non-blank character is `#` are skipped; columns past the second
    /// are ignored. Throws ResourceError / ParseError.
    static Lexicon load(const std::filesystem::path& path);

    void insert(std::string token, double valence);

    std::optional<double> valence_of(std::string_view lower_token) const;
    bool contains(std::string_view lower_token) const;
    std::size_t size() const { return entries_.size(); }
    const std::unordered_map<std::string, double>& entries() const { return entries_; }

private:
    std::unordered_map<std::string, double> entries_;
};

/// Case-insensitive token set loaded from a newline-delimited file.
class WordList {
public:
    WordList() = default;
    explicit WordList(std::string name) : name_(std::move(name)) {}

    /// One token per line, `#` comments and blank lines skipped, entries
    /// lowercased and trimmed. Throws ResourceError on unreadable files.
    static WordList load(const std::filesystem::path& path, std::string name);

    void insert(std::string_view token);

    bool contains(std::string_view token) const;
    std::size_t size() const { return entries_.size(); }
    const std::string& name() const { return name_; }
    const std::unordered_set<std::string>& entries() const { return entries_; }

private:
    std::string name_;
    std::unordered_set<std::string> entries_;
};

/// Irregular-form table: `surface<TAB>lemma` per line (ran -> run).
using LemmaExceptions = std::unordered_map<std::string, std::string>;

LemmaExceptions load_lemma_exceptions(const std::filesystem::path& path);

/// Everything the pipeline reads from disk, shared read-only by workers.
struct Resources {
    Lexicon lexicon;
    WordList bad_words;
    WordList middle_school;
    WordList high_school;
    WordList stopwords;
    WordList abbreviations;    // sentence-terminator suppression
    WordList dictionary;       // base forms guarding suffix stripping
    LemmaExceptions lemma_exceptions;

    /// Load the standard file set from a resource directory:
    ///   sentiment_lexicon.txt, bad_words.txt, middle_school_words.txt,
    ///   high_school_words.txt, stopwords.txt, abbreviations.txt,
    ///   base_dictionary.txt, irregular_lemmas.txt
    static Resources load_dir(const std::filesystem::path& dir);
};

} // namespace booksuit

#endif
