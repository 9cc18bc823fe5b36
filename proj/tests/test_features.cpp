#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>

#include "booksuit/document.hpp"
#include "booksuit/errors.hpp"
#include "booksuit/features.hpp"
#include "booksuit/rng.hpp"
#include "support.hpp"

using namespace booksuit;

TEST_CASE("coefficient_of_positivity: pinned cases") {
    const double sym[] = {0.9};
    const double sym_neg[] = {-0.9};
    CHECK(coefficient_of_positivity(sym, sym_neg) == doctest::Approx(50.0).epsilon(1e-12));

    const double one[] = {1.0};
    CHECK(coefficient_of_positivity(one, {}) == 100.0);

    const double half[] = {0.5};
    const double full_neg[] = {-1.0};
    // 0.5^14 = 1/16384 exactly, so the share is 100/16385
    CHECK(coefficient_of_positivity(half, full_neg) ==
          doctest::Approx(100.0 / 16385.0).epsilon(1e-15));
}

TEST_CASE("coefficient_of_positivity: neutral document and contract checks") {
    bool neutral = false;
    CHECK(coefficient_of_positivity({}, {}, &neutral) == 50.0);
    CHECK(neutral);

    const double bad_pos[] = {0.5, -0.1};
    CHECK_THROWS_AS(coefficient_of_positivity(bad_pos, {}), ContractError);
    const double bad_neg[] = {0.2};
    CHECK_THROWS_AS(coefficient_of_positivity({}, bad_neg), ContractError);
}

TEST_CASE("coefficient_of_positivity: bounds and monotonicity") {
    Rng rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> pos;
        std::vector<double> neg;
        const int np = static_cast<int>(rng.next_index(6));
        const int nn = static_cast<int>(rng.next_index(6));
        for (int i = 0; i < np; ++i)
            pos.push_back(0.05 + 0.95 * rng.next_double());
        for (int i = 0; i < nn; ++i)
            neg.push_back(-0.05 - 0.95 * rng.next_double());

        const double cop = coefficient_of_positivity(pos, neg);
        CHECK(cop >= 0.0);
        CHECK(cop <= 100.0);
        if (!pos.empty() && neg.empty())
            CHECK(cop == 100.0); // 100 exactly iff no negative sentence
        if (!neg.empty())
            CHECK(cop < 100.0);

        // appending one more positive sentence never decreases the value
        std::vector<double> pos2 = pos;
        pos2.push_back(0.05 + 0.95 * rng.next_double());
        CHECK(coefficient_of_positivity(pos2, neg) >= cop);
        // appending one more negative never increases it
        std::vector<double> neg2 = neg;
        neg2.push_back(-0.05 - 0.95 * rng.next_double());
        CHECK(coefficient_of_positivity(pos, neg2) <= cop);
    }
}

TEST_CASE("coefficient_of_positivity: one forced sentence outweighs 16384 mild ones") {
    // 16384 * 0.5^14 = 1.0 exactly, the weight of a single forced sentence
    std::vector<double> pos(16384, 0.5);
    const double forced[] = {-1.0};
    CHECK(coefficient_of_positivity(pos, forced) <= 50.0);
    std::vector<double> milder(16384, 0.49);
    CHECK(coefficient_of_positivity(milder, forced) < 50.0);
}

TEST_CASE("safe_ratio") {
    CHECK(safe_ratio(1303, 2506) == doctest::Approx(0.5199521149).epsilon(1e-9));
    CHECK(safe_ratio(5, 0) == 5.0);
    CHECK(safe_ratio(0, 0) == 0.0);
}

TEST_CASE("vocab_level_ratio") {
    WordList level("level");
    level.insert("analyze");
    CHECK(vocab_level_ratio({"cat", "analyze", "cat"}, level) == doctest::Approx(1.0 / 3.0));
    CHECK(vocab_level_ratio({}, level) == 0.0);
    CHECK(vocab_level_ratio({"analyze", "ANALYZE"}, level) == 1.0);
}

TEST_CASE("extract_features on the mini book fixture matches the frozen oracle") {
    RawDocument doc = load_document(testsupport::fixtures_dir() / "mini_book.txt");
    const ExtractResult result = extract_features(doc, testsupport::resources());

    std::map<std::string, double> expected;
    std::ifstream in(testsupport::fixtures_dir() / "mini_book_expected.csv");
    REQUIRE(in.is_open());
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        if (comma != std::string::npos)
            expected[line.substr(0, comma)] = std::stod(line.substr(comma + 1));
    }
    REQUIRE(expected.size() == 14);

    const FeatureVector& f = result.features;
    CHECK(f.pos_sentences == expected.at("pos_sentences"));
    CHECK(f.neg_sentences == expected.at("neg_sentences"));
    CHECK(f.total_sentences == expected.at("total_sentences"));
    CHECK(f.pos_words == expected.at("pos_words"));
    CHECK(f.neg_words == expected.at("neg_words"));
    CHECK(f.total_words == expected.at("total_words"));
    CHECK(f.pos_sent_to_total == doctest::Approx(expected.at("pos_sent_to_total")).epsilon(1e-12));
    CHECK(f.pos_sent_to_neg == doctest::Approx(expected.at("pos_sent_to_neg")).epsilon(1e-12));
    CHECK(f.pos_words_to_total ==
          doctest::Approx(expected.at("pos_words_to_total")).epsilon(1e-12));
    CHECK(f.pos_words_to_neg == doctest::Approx(expected.at("pos_words_to_neg")).epsilon(1e-12));
    CHECK(f.words_per_sentence ==
          doctest::Approx(expected.at("words_per_sentence")).epsilon(1e-12));
    CHECK(f.midschool_word_ratio ==
          doctest::Approx(expected.at("midschool_word_ratio")).epsilon(1e-12));
    CHECK(f.highschool_word_ratio ==
          doctest::Approx(expected.at("highschool_word_ratio")).epsilon(1e-12));
    CHECK(std::fabs(f.coefficient_of_positivity -
                    expected.at("coefficient_of_positivity")) < 1e-6);
    CHECK_FALSE(result.neutral_document);
}

TEST_CASE("extract_features: consistency invariants and determinism") {
    RawDocument doc = load_document(testsupport::fixtures_dir() / "mini_book.txt");
    const FeatureVector a = extract_features(doc, testsupport::resources()).features;
    const FeatureVector b = extract_features(doc, testsupport::resources()).features;
    CHECK(a.to_vector() == b.to_vector());

    CHECK(a.pos_sentences + a.neg_sentences <= a.total_sentences);
    CHECK(a.pos_words + a.neg_words <= a.total_words);
    CHECK(a.pos_sent_to_total * a.total_sentences ==
          doctest::Approx(a.pos_sentences).epsilon(1e-9));
    CHECK(a.words_per_sentence * a.total_sentences ==
          doctest::Approx(a.total_words).epsilon(1e-9));
    CHECK(a.coefficient_of_positivity >= 0.0);
    CHECK(a.coefficient_of_positivity <= 100.0);
}

TEST_CASE("extract_features: empty and neutral documents") {
    RawDocument empty{"empty", "empty", "   \n\t  ", std::nullopt};
    CHECK_THROWS_AS(extract_features(empty, testsupport::resources()), EmptyDocumentError);

    RawDocument neutral{"neutral", "neutral", "The cart rolled. The wheel turned.",
                        std::nullopt};
    const ExtractResult result = extract_features(neutral, testsupport::resources());
    CHECK(result.neutral_document);
    CHECK(result.features.coefficient_of_positivity == 50.0);
}

TEST_CASE("feature vector round trip and names") {
    FeatureVector f;
    f.pos_sentences = 2;
    f.coefficient_of_positivity = 46.5;
    const FeatureVector g = FeatureVector::from_vector(f.to_vector());
    CHECK(g.to_vector() == f.to_vector());
    CHECK(FeatureVector::names()[0] == "pos_sentences");
    CHECK(FeatureVector::names()[13] == "coefficient_of_positivity");
}
