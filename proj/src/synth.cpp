#include "booksuit/synth.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <string>

#include "booksuit/rng.hpp"

namespace booksuit {
namespace {

struct WordPools {
    std::vector<std::string> strong_pos;
    std::vector<std::string> mild_pos;
    std::vector<std::string> strong_neg;
    std::vector<std::string> mild_neg;
    std::vector<std::string> filler;
    std::vector<std::string> flagged;
    std::vector<std::string> midschool;
    std::vector<std::string> highschool;
};

// Hash-map iteration order is unspecified, so every pool is sorted before
// any sampling touches it.
WordPools build_pools(const Resources& res) {
    WordPools pools;
    for (const auto& [word, valence] : res.lexicon.entries()) {
        if (word.find('\'') != std::string::npos)
            continue;
        if (valence >= 2.0)
            pools.strong_pos.push_back(word);
        else if (valence >= 0.8)
            pools.mild_pos.push_back(word);
        else if (valence <= -2.0)
            pools.strong_neg.push_back(word);
        else if (valence <= -0.8)
            pools.mild_neg.push_back(word);
    }
    for (const std::string& word : res.dictionary.entries()) {
        if (word.size() < 3 || word.find('\'') != std::string::npos)
            continue;
        if (!res.lexicon.contains(word) && !res.bad_words.contains(word) &&
            !res.stopwords.contains(word))
            pools.filler.push_back(word);
    }
    for (const std::string& word : res.bad_words.entries())
        if (word.find('-') == std::string::npos)
            pools.flagged.push_back(word);
    pools.midschool.assign(res.middle_school.entries().begin(),
                           res.middle_school.entries().end());
    pools.highschool.assign(res.high_school.entries().begin(),
                            res.high_school.entries().end());

    for (auto* pool : {&pools.strong_pos, &pools.mild_pos, &pools.strong_neg, &pools.mild_neg,
                       &pools.filler, &pools.flagged, &pools.midschool, &pools.highschool})
        std::sort(pool->begin(), pool->end());
    return pools;
}

const std::string& pick(const std::vector<std::string>& pool, Rng& rng) {
    return pool[static_cast<std::size_t>(rng.next_index(pool.size()))];
}

enum class SentenceKind { StrongPositive, MildPositive, StrongNegative, MildNegative, Flagged,
                          Neutral };

std::string make_sentence(SentenceKind kind, const WordPools& pools, Rng& rng,
                          double level_word_rate, const std::vector<std::string>& level_pool) {
    std::vector<std::string> words;
    const int filler_count = 5 + static_cast<int>(rng.next_index(9));
    for (int i = 0; i < filler_count; ++i)
        words.push_back(pick(pools.filler, rng));

    switch (kind) {
        case SentenceKind::StrongPositive: {
            const int n = 2 + static_cast<int>(rng.next_index(2));
            for (int i = 0; i < n; ++i)
                words.push_back(pick(pools.strong_pos, rng));
            if (rng.next_double() < 0.3)
                words.push_back(pick(pools.mild_pos, rng));
            break;
        }
        case SentenceKind::MildPositive:
            words.push_back(pick(pools.mild_pos, rng));
            break;
        case SentenceKind::StrongNegative: {
            const int n = 2 + static_cast<int>(rng.next_index(2));
            for (int i = 0; i < n; ++i)
                words.push_back(pick(pools.strong_neg, rng));
            if (rng.next_double() < 0.3)
                words.push_back(pick(pools.mild_neg, rng));
            break;
        }
        case SentenceKind::MildNegative:
            words.push_back(pick(pools.mild_neg, rng));
            break;
        case SentenceKind::Flagged:
            words.push_back(pick(pools.flagged, rng));
            if (rng.next_double() < 0.4)
                words.push_back(pick(pools.strong_neg, rng));
            break;
        case SentenceKind::Neutral:
            break;
    }
    if (rng.next_double() < level_word_rate && !level_pool.empty())
        words.push_back(pick(level_pool, rng));

    rng.shuffle(words);
    std::string sentence;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0)
            sentence += ' ';
        sentence += words[i];
    }
    if (!sentence.empty())
        sentence[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(sentence[0])));
    sentence += rng.next_double() < 0.08 ? '!' : '.';
    return sentence;
}

struct DocProfile {
    double strong_pos = 0;
    double mild_pos = 0;
    double strong_neg = 0;
    double mild_neg = 0;
    double flagged = 0;
    double mid_rate = 0;
    double high_rate = 0;
};

std::string make_document(const DocProfile& profile, const WordPools& pools, Rng& rng) {
    const int sentence_count = 80 + static_cast<int>(rng.next_index(160));
    std::string body;
    for (int s = 0; s < sentence_count; ++s) {
        const double r = rng.next_double();
        SentenceKind kind = SentenceKind::Neutral;
        double edge = profile.strong_pos;
        if (r < edge)
            kind = SentenceKind::StrongPositive;
        else if (r < (edge += profile.mild_pos))
            kind = SentenceKind::MildPositive;
        else if (r < (edge += profile.strong_neg))
            kind = SentenceKind::StrongNegative;
        else if (r < (edge += profile.mild_neg))
            kind = SentenceKind::MildNegative;
        else if (r < (edge += profile.flagged))
            kind = SentenceKind::Flagged;

        const bool high = rng.next_double() < profile.high_rate / (profile.high_rate +
                                                                   profile.mid_rate + 1e-9);
        if (!body.empty())
            body += ' ';
        body += make_sentence(kind, pools, rng, profile.mid_rate + profile.high_rate,
                              high ? pools.highschool : pools.midschool);
    }
    return body;
}

} // namespace

std::vector<RawDocument> make_synthetic_corpus(const Resources& resources,
                                               const SynthConfig& config) {
    const WordPools pools = build_pools(resources);
    Rng rng(config.seed);
    std::vector<RawDocument> docs;
    docs.reserve(static_cast<std::size_t>(config.count));

    const int suitable_count = static_cast<int>(
        static_cast<double>(config.count) * config.suitable_fraction);

    for (int i = 0; i < config.count; ++i) {
        const bool suitable = i < suitable_count;
        DocProfile profile;
        if (suitable) {
            if (rng.next_double() < 0.18) {
                // melancholy children's book: positivity barely carries it
                profile = {0.07, 0.20, 0.13, 0.12, 0.0, 0.05, 0.01};
            } else {
                profile = {0.40, 0.20, 0.03, 0.08, 0.0, 0.05, 0.01};
            }
        } else {
            if (rng.next_double() < 0.25) {
                // superficially warm but sprinkled with flagged words
                profile = {0.14, 0.15, 0.10, 0.10, 0.015, 0.02, 0.05};
            } else {
                profile = {0.10, 0.10, 0.26, 0.12, 0.14, 0.02, 0.05};
            }
        }
        RawDocument doc;
        char name[32];
        std::snprintf(name, sizeof(name), "synthetic-%03d", i);
        doc.title = name;
        doc.id = doc.title;
        doc.label = suitable ? 1 : 0;
        doc.body = make_document(profile, pools, rng);
        docs.push_back(std::move(doc));
    }
    return docs;
}

} // namespace booksuit
