#ifndef BOOKSUIT_FEATURES_HPP
#define BOOKSUIT_FEATURES_HPP

#include <Eigen/Core>
#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "booksuit/document.hpp"
#include "booksuit/resources.hpp"

namespace booksuit {

using Vector14 = Eigen::Matrix<double, 14, 1>;

/// The 14 per-book features, in fixed dataset-column order.
struct FeatureVector {
    double pos_sentences = 0;
    double neg_sentences = 0;
    double total_sentences = 0;
    double pos_sent_to_total = 0;
    double pos_sent_to_neg = 0;
    double pos_words = 0;
    double neg_words = 0;
    double total_words = 0;
    double pos_words_to_total = 0;
    double pos_words_to_neg = 0;
    double words_per_sentence = 0;
    double midschool_word_ratio = 0;
    double highschool_word_ratio = 0;
    double coefficient_of_positivity = 0;

    static constexpr int kCount = 14;

    Vector14 to_vector() const;
    static FeatureVector from_vector(const Vector14& v);

    /// Column names in dataset order.
    static const std::array<std::string_view, kCount>& names();
};

/// numerator / denominator, treating a zero denominator as 1 so the result
/// stays finite and monotone in the numerator.
double safe_ratio(double numerator, double denominator);

/// Share of the 14th-power sentiment mass contributed by positive
/// sentences, as a percentage. `pos` must be strictly positive compounds,
/// `neg` strictly negative ones (ContractError otherwise). With no polar
/// sentences at all the result is the 50.0 midpoint and `*neutral_document`
/// (when given) is set.
double coefficient_of_positivity(std::span<const double> pos, std::span<const double> neg,
                                 bool* neutral_document = nullptr);

/// Fraction of lemma occurrences found in a vocabulary-level list.
double vocab_level_ratio(const std::vector<std::string>& lemmas, const WordList& level_list);

struct FeatureOptions {
    double polarity_threshold = 0.05;
};

struct ExtractResult {
    FeatureVector features;
    bool neutral_document = false;
};

/// Full per-document pipeline: normalize, split sentences, score each
/// sentence (raw token stream) for the sentence counts and compounds, and
/// count words on the filtered, lemmatized stream. Throws
/// EmptyDocumentError when no sentence survives preprocessing.
ExtractResult extract_features(const RawDocument& document, const Resources& resources,
                               const FeatureOptions& options = {});

} // namespace booksuit

#endif
