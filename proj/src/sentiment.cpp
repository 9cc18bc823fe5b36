#include "booksuit/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "booksuit/text.hpp"

namespace booksuit {
namespace {

// Empirically derived rule constants from the reference VADER model.
constexpr double kBoostIncr = 0.293;
constexpr double kBoostDecr = -0.293;
constexpr double kCapsBoost = 0.733;
constexpr double kNegationScale = -0.74;
constexpr double kNeverBoost = 1.25;
constexpr double kButBefore = 0.5;
constexpr double kButAfter = 1.5;
constexpr double kExclaimStep = 0.292;
constexpr int kMaxExclaims = 4;
constexpr double kQuestionStep = 0.18;
constexpr double kQuestionCap = 0.96;
constexpr double kNormAlpha = 15.0;
constexpr double kDampOneBack = 0.95;
constexpr double kDampTwoBack = 0.90;

const std::unordered_set<std::string>& negate_set() {
    static const std::unordered_set<std::string> kNegate{
        "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
        "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
        "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
        "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
        "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
        "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
        "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
        "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom",
        "despite"};
    return kNegate;
}

const std::unordered_map<std::string, double>& booster_dict() {
    static const std::unordered_map<std::string, double> kBoosters{
        {"absolutely", kBoostIncr}, {"amazingly", kBoostIncr}, {"awfully", kBoostIncr},
        {"completely", kBoostIncr}, {"considerable", kBoostIncr}, {"considerably", kBoostIncr},
        {"decidedly", kBoostIncr}, {"deeply", kBoostIncr}, {"effing", kBoostIncr},
        {"enormous", kBoostIncr}, {"enormously", kBoostIncr}, {"entirely", kBoostIncr},
        {"especially", kBoostIncr}, {"exceptional", kBoostIncr}, {"exceptionally", kBoostIncr},
        {"extreme", kBoostIncr}, {"extremely", kBoostIncr}, {"fabulously", kBoostIncr},
        {"flipping", kBoostIncr}, {"flippin", kBoostIncr}, {"frickin", kBoostIncr},
        {"fricking", kBoostIncr}, {"friggin", kBoostIncr}, {"frigging", kBoostIncr},
        {"fully", kBoostIncr}, {"fuckin", kBoostIncr}, {"fucking", kBoostIncr},
        {"greatly", kBoostIncr}, {"hella", kBoostIncr}, {"highly", kBoostIncr},
        {"hugely", kBoostIncr}, {"incredible", kBoostIncr}, {"incredibly", kBoostIncr},
        {"intensely", kBoostIncr}, {"major", kBoostIncr}, {"majorly", kBoostIncr},
        {"more", kBoostIncr}, {"most", kBoostIncr}, {"particularly", kBoostIncr},
        {"purely", kBoostIncr}, {"quite", kBoostIncr}, {"really", kBoostIncr},
        {"remarkably", kBoostIncr}, {"so", kBoostIncr}, {"substantially", kBoostIncr},
        {"thoroughly", kBoostIncr}, {"total", kBoostIncr}, {"totally", kBoostIncr},
        {"tremendous", kBoostIncr}, {"tremendously", kBoostIncr}, {"uber", kBoostIncr},
        {"unbelievably", kBoostIncr}, {"unusually", kBoostIncr}, {"utter", kBoostIncr},
        {"utterly", kBoostIncr}, {"very", kBoostIncr},
        {"almost", kBoostDecr}, {"barely", kBoostDecr}, {"hardly", kBoostDecr},
        {"just enough", kBoostDecr}, {"kind of", kBoostDecr}, {"kinda", kBoostDecr},
        {"kindof", kBoostDecr}, {"kind-of", kBoostDecr}, {"less", kBoostDecr},
        {"little", kBoostDecr}, {"marginal", kBoostDecr}, {"marginally", kBoostDecr},
        {"occasional", kBoostDecr}, {"occasionally", kBoostDecr}, {"partly", kBoostDecr},
        {"scarce", kBoostDecr}, {"scarcely", kBoostDecr}, {"slight", kBoostDecr},
        {"slightly", kBoostDecr}, {"somewhat", kBoostDecr}, {"sort of", kBoostDecr},
        {"sorta", kBoostDecr}, {"sortof", kBoostDecr}, {"sort-of", kBoostDecr}};
    return kBoosters;
}

bool is_negator(const std::string& lower) {
    if (negate_set().count(lower) > 0)
        return true;
    return lower.find("n't") != std::string::npos;
}

double normalize_sum(double score) {
    const double norm = score / std::sqrt(score * score + kNormAlpha);
    return std::clamp(norm, -1.0, 1.0);
}

// Booster contribution of a preceding token, with ALL-CAPS emphasis.
double scalar_inc_dec(const std::string& token, const std::string& lower, double valence,
                      bool cap_diff) {
    const auto it = booster_dict().find(lower);
    if (it == booster_dict().end())
        return 0.0;
    double scalar = it->second;
    if (valence < 0.0)
        scalar = -scalar;
    if (is_all_caps(token) && cap_diff)
        scalar += valence > 0.0 ? kCapsBoost : -kCapsBoost;
    return scalar;
}

void negation_check(double& valence, const std::vector<std::string>& lower, int back,
                    std::size_t i) {
    switch (back) {
        case 0:
            if (is_negator(lower[i - 1]))
                valence *= kNegationScale;
            break;
        case 1:
            if (lower[i - 2] == "never" && (lower[i - 1] == "so" || lower[i - 1] == "this"))
                valence *= kNeverBoost;
            else if (lower[i - 2] == "without" && lower[i - 1] == "doubt")
                ; // plain intensity, no negation
            else if (is_negator(lower[i - 2]))
                valence *= kNegationScale;
            break;
        case 2:
            if (lower[i - 3] == "never" &&
                (lower[i - 2] == "so" || lower[i - 2] == "this" || lower[i - 1] == "so" ||
                 lower[i - 1] == "this"))
                valence *= kNeverBoost;
            else if (lower[i - 3] == "without" &&
                     (lower[i - 2] == "doubt" || lower[i - 1] == "doubt"))
                ;
            else if (is_negator(lower[i - 3]))
                valence *= kNegationScale;
            break;
        default:
            break;
    }
}

// Multiword degree modifiers ("sort of", "just enough") behind the token.
void booster_bigram_check(double& valence, const std::vector<std::string>& lower,
                          std::size_t i) {
    const std::string two_one = lower[i - 2] + " " + lower[i - 1];
    const std::string three_two = lower[i - 3] + " " + lower[i - 2];
    const std::string three_two_one = lower[i - 3] + " " + two_one;
    for (const std::string* gram : {&three_two_one, &three_two, &two_one}) {
        const auto it = booster_dict().find(*gram);
        if (it != booster_dict().end())
            valence += it->second;
    }
}

void least_check(double& valence, const std::vector<std::string>& lower, std::size_t i,
                 const Lexicon& lexicon) {
    if (i > 1 && !lexicon.contains(lower[i - 1]) && lower[i - 1] == "least") {
        if (lower[i - 2] != "at" && lower[i - 2] != "very")
            valence *= kNegationScale;
    } else if (i > 0 && !lexicon.contains(lower[i - 1]) && lower[i - 1] == "least") {
        valence *= kNegationScale;
    }
}

// True when some but not all tokens are ALL CAPS.
bool all_cap_differential(const std::vector<std::string>& tokens) {
    std::size_t caps = 0;
    for (const std::string& t : tokens)
        if (is_all_caps(t))
            ++caps;
    return caps > 0 && caps < tokens.size();
}

double valence_of_token(const std::vector<std::string>& tokens,
                        const std::vector<std::string>& lower, std::size_t i, bool cap_diff,
                        const Lexicon& lexicon) {
    const auto raw = lexicon.valence_of(lower[i]);
    if (!raw)
        return 0.0;
    double valence = *raw;

    // "no" negating an adjacent lexicon item rather than scoring itself
    if (lower[i] == "no" && i + 1 < tokens.size() && lexicon.contains(lower[i + 1]))
        valence = 0.0;
    if ((i > 0 && lower[i - 1] == "no") || (i > 1 && lower[i - 2] == "no") ||
        (i > 2 && lower[i - 3] == "no" && (lower[i - 1] == "or" || lower[i - 1] == "nor")))
        valence = *raw * kNegationScale;

    if (is_all_caps(tokens[i]) && cap_diff)
        valence += valence > 0.0 ? kCapsBoost : -kCapsBoost;

    for (int back = 0; back < 3; ++back) {
        if (i <= static_cast<std::size_t>(back))
            continue;
        const std::size_t j = i - static_cast<std::size_t>(back) - 1;
        if (lexicon.contains(lower[j]))
            continue;
        double s = scalar_inc_dec(tokens[j], lower[j], valence, cap_diff);
        if (back == 1 && s != 0.0)
            s *= kDampOneBack;
        if (back == 2 && s != 0.0)
            s *= kDampTwoBack;
        valence += s;
        negation_check(valence, lower, back, i);
        if (back == 2)
            booster_bigram_check(valence, lower, i);
    }
    least_check(valence, lower, i, lexicon);
    return valence;
}

void but_check(const std::vector<std::string>& lower, std::vector<double>& sentiments) {
    const auto it = std::find(lower.begin(), lower.end(), "but");
    if (it == lower.end())
        return;
    const std::size_t but_index = static_cast<std::size_t>(it - lower.begin());
    for (std::size_t i = 0; i < sentiments.size(); ++i) {
        if (i < but_index)
            sentiments[i] *= kButBefore;
        else if (i > but_index)
            sentiments[i] *= kButAfter;
    }
}

double punctuation_emphasis(std::string_view text) {
    int exclaims = 0;
    int questions = 0;
    for (const char ch : text) {
        if (ch == '!')
            ++exclaims;
        else if (ch == '?')
            ++questions;
    }
    double amp = kExclaimStep * std::min(exclaims, kMaxExclaims);
    if (questions > 1)
        amp += questions <= 3 ? kQuestionStep * questions : kQuestionCap;
    return amp;
}

} // namespace

std::vector<std::string> rule_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const auto is_space = [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
    };
    const auto is_punct = [](char c) {
        return std::ispunct(static_cast<unsigned char>(c)) != 0;
    };
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i]))
            ++i;
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i]))
            ++i;
        if (i == start)
            continue;
        std::string_view word = text.substr(start, i - start);
        std::size_t b = 0;
        std::size_t e = word.size();
        while (b < e && is_punct(word[b]))
            ++b;
        while (e > b && is_punct(word[e - 1]))
            --e;
        const std::string_view stripped = word.substr(b, e - b);
        tokens.emplace_back(stripped.size() <= 2 ? word : stripped);
    }
    return tokens;
}

WordScore score_word(const std::string& lemma, const Lexicon& lexicon,
                     const WordList& bad_words) {
    if (bad_words.contains(lemma))
        return {lemma, -1.0, true};
    if (const auto raw = lexicon.valence_of(lemma))
        return {lemma, std::clamp(*raw / 4.0, -1.0, 1.0), false};
    return {lemma, 0.0, false};
}

SentenceScore score_sentence(std::string_view sentence_text, const Lexicon& lexicon,
                             const WordList& bad_words) {
    const std::vector<std::string> tokens = rule_tokens(sentence_text);
    if (tokens.empty())
        return {0.0, 1.0, 0.0, 0.0, false};

    std::vector<std::string> lower;
    lower.reserve(tokens.size());
    for (const std::string& t : tokens)
        lower.push_back(to_lower(t));

    const bool cap_diff = all_cap_differential(tokens);

    std::vector<double> sentiments;
    sentiments.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (booster_dict().count(lower[i]) > 0) {
            sentiments.push_back(0.0);
            continue;
        }
        if (i + 1 < tokens.size() && lower[i] == "kind" && lower[i + 1] == "of") {
            sentiments.push_back(0.0);
            continue;
        }
        sentiments.push_back(valence_of_token(tokens, lower, i, cap_diff, lexicon));
    }
    but_check(lower, sentiments);

    double sum = 0.0;
    for (const double s : sentiments)
        sum += s;
    const double punct = punctuation_emphasis(sentence_text);
    if (sum > 0.0)
        sum += punct;
    else if (sum < 0.0)
        sum -= punct;

    SentenceScore score;
    score.compound = normalize_sum(sum);

    double pos_sum = 0.0;
    double neg_sum = 0.0;
    std::size_t neu_count = 0;
    for (const double s : sentiments) {
        if (s > 0.0)
            pos_sum += s + 1.0; // neutral tokens count as 1, compensate
        else if (s < 0.0)
            neg_sum += s - 1.0;
        else
            ++neu_count;
    }
    if (pos_sum > std::fabs(neg_sum))
        pos_sum += punct;
    else if (pos_sum < std::fabs(neg_sum))
        neg_sum -= punct;

    const double total = pos_sum + std::fabs(neg_sum) + static_cast<double>(neu_count);
    score.pos = std::fabs(pos_sum / total);
    score.neg = std::fabs(neg_sum / total);
    score.neu = static_cast<double>(neu_count) / total;

    for (const std::string& t : lower) {
        if (bad_words.contains(t)) {
            score.compound = -1.0;
            score.forced = true;
            break;
        }
    }
    return score;
}

Polarity classify_polarity(double compound, double threshold) {
    if (compound >= threshold)
        return Polarity::Positive;
    if (compound <= -threshold)
        return Polarity::Negative;
    return Polarity::Neutral;
}

} // namespace booksuit
