#include "booksuit/features.hpp"

#include <cmath>

#include "booksuit/errors.hpp"
#include "booksuit/preprocess.hpp"
#include "booksuit/sentiment.hpp"
#include "booksuit/text.hpp"

namespace booksuit {

Vector14 FeatureVector::to_vector() const {
    Vector14 v;
    v << pos_sentences, neg_sentences, total_sentences, pos_sent_to_total, pos_sent_to_neg,
        pos_words, neg_words, total_words, pos_words_to_total, pos_words_to_neg,
        words_per_sentence, midschool_word_ratio, highschool_word_ratio,
        coefficient_of_positivity;
    return v;
}

FeatureVector FeatureVector::from_vector(const Vector14& v) {
    FeatureVector f;
    f.pos_sentences = v[0];
    f.neg_sentences = v[1];
    f.total_sentences = v[2];
    f.pos_sent_to_total = v[3];
    f.pos_sent_to_neg = v[4];
    f.pos_words = v[5];
    f.neg_words = v[6];
    f.total_words = v[7];
    f.pos_words_to_total = v[8];
    f.pos_words_to_neg = v[9];
    f.words_per_sentence = v[10];
    f.midschool_word_ratio = v[11];
    f.highschool_word_ratio = v[12];
    f.coefficient_of_positivity = v[13];
    return f;
}

const std::array<std::string_view, FeatureVector::kCount>& FeatureVector::names() {
    static const std::array<std::string_view, kCount> kNames = {
        "pos_sentences",      "neg_sentences",       "total_sentences",
        "pos_sent_to_total",  "pos_sent_to_neg",     "pos_words",
        "neg_words",          "total_words",         "pos_words_to_total",
        "pos_words_to_neg",   "words_per_sentence",  "midschool_word_ratio",
        "highschool_word_ratio", "coefficient_of_positivity"};
    return kNames;
}

double safe_ratio(double numerator, double denominator) {
    return denominator == 0.0 ? numerator : numerator / denominator;
}

namespace {

double pow14(double x) {
    const double x2 = x * x;
    const double x4 = x2 * x2;
    const double x8 = x4 * x4;
    return x8 * x4 * x2;
}

} // namespace

double coefficient_of_positivity(std::span<const double> pos, std::span<const double> neg,
                                 bool* neutral_document) {
    double pos_mass = 0.0;
    double neg_mass = 0.0;
    for (const double c : pos) {
        if (c <= 0.0)
            throw ContractError("positive compound must be > 0, got " + std::to_string(c));
        pos_mass += pow14(c);
    }
    for (const double c : neg) {
        if (c >= 0.0)
            throw ContractError("negative compound must be < 0, got " + std::to_string(c));
        neg_mass += pow14(c); // even power, every term positive
    }
    if (pos_mass + neg_mass == 0.0) {
        if (neutral_document)
            *neutral_document = true;
        return 50.0;
    }
    // grouped so the all-positive case is exactly 100 and symmetry exactly 50
    return 100.0 * (pos_mass / (pos_mass + neg_mass));
}

double vocab_level_ratio(const std::vector<std::string>& lemmas, const WordList& level_list) {
    if (lemmas.empty())
        return 0.0;
    std::size_t hits = 0;
    for (const std::string& lemma : lemmas)
        if (level_list.contains(lemma))
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(lemmas.size());
}

ExtractResult extract_features(const RawDocument& document, const Resources& resources,
                               const FeatureOptions& options) {
    const std::string body = normalize_whitespace(document.body);
    const std::vector<Sentence> sentences = split_sentences(body, resources.abbreviations);
    if (sentences.empty())
        throw EmptyDocumentError("document '" + document.id +
                                 "' has no sentences after preprocessing");

    const Lemmatizer lemmatizer(resources.lemma_exceptions, resources.dictionary);

    std::vector<double> pos_compounds;
    std::vector<double> neg_compounds;
    long pos_sentences = 0;
    long neg_sentences = 0;
    long pos_words = 0;
    long neg_words = 0;
    long total_words = 0;
    long lemma_total = 0;
    long mid_hits = 0;
    long high_hits = 0;

    for (const Sentence& sentence : sentences) {
        const SentenceScore score =
            score_sentence(sentence.text, resources.lexicon, resources.bad_words);
        switch (classify_polarity(score.compound, options.polarity_threshold)) {
            case Polarity::Positive:
                ++pos_sentences;
                pos_compounds.push_back(score.compound);
                break;
            case Polarity::Negative:
                ++neg_sentences;
                neg_compounds.push_back(score.compound);
                break;
            case Polarity::Neutral:
                break;
        }

        const std::vector<std::string> raw_tokens = tokenize_words(sentence.text);
        total_words += static_cast<long>(raw_tokens.size());

        const std::vector<std::string> lemmas =
            lemmatizer.lemmatize_all(remove_stopwords(raw_tokens, resources.stopwords));
        lemma_total += static_cast<long>(lemmas.size());
        for (const std::string& lemma : lemmas) {
            const WordScore ws = score_word(lemma, resources.lexicon, resources.bad_words);
            if (ws.valence >= options.polarity_threshold)
                ++pos_words;
            else if (ws.valence <= -options.polarity_threshold)
                ++neg_words;
            if (resources.middle_school.contains(lemma))
                ++mid_hits;
            if (resources.high_school.contains(lemma))
                ++high_hits;
        }
    }

    ExtractResult result;
    FeatureVector& f = result.features;
    f.pos_sentences = static_cast<double>(pos_sentences);
    f.neg_sentences = static_cast<double>(neg_sentences);
    f.total_sentences = static_cast<double>(sentences.size());
    f.pos_sent_to_total = safe_ratio(f.pos_sentences, f.total_sentences);
    f.pos_sent_to_neg = safe_ratio(f.pos_sentences, f.neg_sentences);
    f.pos_words = static_cast<double>(pos_words);
    f.neg_words = static_cast<double>(neg_words);
    f.total_words = static_cast<double>(total_words);
    f.pos_words_to_total = safe_ratio(f.pos_words, f.total_words);
    f.pos_words_to_neg = safe_ratio(f.pos_words, f.neg_words);
    f.words_per_sentence = safe_ratio(f.total_words, f.total_sentences);
    f.midschool_word_ratio =
        lemma_total == 0 ? 0.0 : static_cast<double>(mid_hits) / static_cast<double>(lemma_total);
    f.highschool_word_ratio =
        lemma_total == 0 ? 0.0 : static_cast<double>(high_hits) / static_cast<double>(lemma_total);
    f.coefficient_of_positivity =
        coefficient_of_positivity(pos_compounds, neg_compounds, &result.neutral_document);
    return result;
}

} // namespace booksuit
