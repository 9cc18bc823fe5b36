// Acceptance suite: one self-contained check per shipping criterion.
// Run all with `acceptance`, or a single one with `--criterion N`.
// Prints one PASS/FAIL line per criterion; the exit code is the number of
// failures.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "booksuit/ann.hpp"
#include "booksuit/dataset.hpp"
#include "booksuit/errors.hpp"
#include "booksuit/eval.hpp"
#include "booksuit/features.hpp"
#include "booksuit/preprocess.hpp"
#include "booksuit/rng.hpp"
#include "booksuit/sentiment.hpp"
#include "booksuit/synth.hpp"
#include "booksuit/text.hpp"

namespace fs = std::filesystem;
using namespace booksuit;

namespace {

const fs::path kSourceDir = BOOKSUIT_SOURCE_DIR;
const fs::path kResourcesDir = kSourceDir / "resources";
const fs::path kFixturesDir = kSourceDir / "tests";
const fs::path kBooksDir = kSourceDir / "tests" / "books";

const Resources& resources() {
    static const Resources res = Resources::load_dir(kResourcesDir);
    return res;
}

struct Checker {
    int failures = 0;
    std::ostringstream log;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            log << "    FAILED: " << what << "\n";
        }
    }
};

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::path(BOOKSUIT_BINARY_DIR) / "acceptance_scratch" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, const fs::path& workdir) {
    const std::string command = "cd '" + workdir.string() + "' && '" +
                                std::string(BOOKSUIT_CLI_PATH) + "' --resources '" +
                                kResourcesDir.string() + "' " + args +
                                " > cli_stdout.log 2> cli_stderr.log";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// --------------------------------------------------------------------------
// 1. metric identities
// --------------------------------------------------------------------------

bool criterion_metric_identities(Checker& check) {
    Rng rng(1001);
    for (int trial = 0; trial < 1000; ++trial) {
        ConfusionMatrix cm{static_cast<long>(rng.next_index(500)),
                           static_cast<long>(rng.next_index(500)),
                           static_cast<long>(rng.next_index(500)),
                           static_cast<long>(rng.next_index(500))};
        if (cm.total() == 0)
            cm.tn = 1;
        const MetricsReport r = metrics(cm);
        check.require(r.accuracy == static_cast<double>(cm.tp + cm.tn) / cm.total(),
                      "accuracy identity");
        if (cm.tp + cm.fp > 0)
            check.require(*r.precision == static_cast<double>(cm.tp) / (cm.tp + cm.fp),
                          "precision identity");
        if (cm.tp + cm.fn > 0)
            check.require(*r.recall == static_cast<double>(cm.tp) / (cm.tp + cm.fn),
                          "recall identity");
        if (r.precision && r.recall && *r.precision + *r.recall > 0.0) {
            const double expected =
                2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
            check.require(r.f_measure.has_value() &&
                              std::fabs(*r.f_measure - expected) <= 1e-12,
                          "f-measure harmonic identity to 1e-12");
        }
    }
    const MetricsReport hand = metrics({3, 1, 2, 4});
    check.require(std::fabs(hand.accuracy - 0.7) < 1e-15, "hand case accuracy 0.7");
    check.require(std::fabs(*hand.precision - 0.75) < 1e-15, "hand case precision 0.75");
    check.require(std::fabs(*hand.recall - 0.6) < 1e-15, "hand case recall 0.6");
    check.require(std::fabs(*hand.f_measure - 0.6667) < 5e-5, "hand case f-measure 0.6667");
    return check.failures == 0;
}

// --------------------------------------------------------------------------
// 2. sentence-scoring golden oracle
// --------------------------------------------------------------------------

bool criterion_sentiment_oracle(Checker& check) {
    std::ifstream in(kFixturesDir / "golden_sentences.tsv");
    check.require(in.is_open(), "golden_sentences.tsv present");
    if (!in.is_open())
        return false;
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#')
            continue;
        const auto tab = line.find('\t');
        const std::string sentence = line.substr(0, tab);
        const double expected = std::stod(line.substr(tab + 1));
        const SentenceScore score =
            score_sentence(sentence, resources().lexicon, resources().bad_words);
        check.require(std::fabs(score.compound - expected) <= 0.001,
                      "golden compound within 0.001: " + sentence);
        ++count;
    }
    check.require(count == 25, "25 golden sentences");

    const char* flagged[] = {
        "Then the damn pirate cursed them.",
        "A wonderful, glorious, damn lovely day!",
        "The junkie wandered home.",
    };
    for (const char* sentence : flagged) {
        const SentenceScore s =
            score_sentence(sentence, resources().lexicon, resources().bad_words);
        check.require(s.compound == -1.0 && s.forced,
                      std::string("flagged sentence scores exactly -1.0: ") + sentence);
    }
    return check.failures == 0;
}

// --------------------------------------------------------------------------
// 3. coefficient-of-positivity properties
// --------------------------------------------------------------------------

bool criterion_cop_properties(Checker& check) {
    const double p9[] = {0.9};
    const double n9[] = {-0.9};
    check.require(coefficient_of_positivity(p9, n9) == 50.0, "symmetry case is exactly 50");

    const double half[] = {0.5};
    const double full[] = {-1.0};
    check.require(coefficient_of_positivity(half, full) == 100.0 / 16385.0,
                  "exact arithmetic case 100/16385");

    Rng rng(3003);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> pos;
        std::vector<double> neg;
        for (std::uint64_t i = rng.next_index(8); i-- > 0;)
            pos.push_back(0.05 + 0.95 * rng.next_double());
        for (std::uint64_t i = rng.next_index(8); i-- > 0;)
            neg.push_back(-0.05 - 0.95 * rng.next_double());
        const double cop = coefficient_of_positivity(pos, neg);
        check.require(cop >= 0.0 && cop <= 100.0, "bounds [0, 100]");

        std::vector<double> pos_more = pos;
        pos_more.push_back(0.05 + 0.95 * rng.next_double());
        check.require(coefficient_of_positivity(pos_more, neg) >= cop,
                      "monotone under appended positive sentence");
        std::vector<double> neg_more = neg;
        neg_more.push_back(-0.05 - 0.95 * rng.next_double());
        check.require(coefficient_of_positivity(pos, neg_more) <= cop,
                      "antitone under appended negative sentence");
    }
    return check.failures == 0;
}

// --------------------------------------------------------------------------
// 4. gradient correctness
// --------------------------------------------------------------------------

bool criterion_gradients(Checker& check) {
    Rng rng(4004);
    const double fd_step = 1e-5;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        NetworkConfig cfg;
        cfg.hidden1 = 2 + static_cast<int>(rng.next_index(5));
        cfg.hidden2 = 2 + static_cast<int>(rng.next_index(4));
        cfg.seed = 40000 + static_cast<std::uint64_t>(trial);
        ModelParams params = init_params(cfg);
        // keep pre-activations off the rectifier kink, where one-sided
        // finite differences disagree with any valid subgradient
        for (auto& b : params.biases)
            for (Eigen::Index k = 0; k < b.size(); ++k)
                b[k] = 0.05 * rng.next_normal();

        Eigen::MatrixXd batch(14, 4);
        Eigen::RowVectorXd labels(4);
        for (Eigen::Index c = 0; c < 4; ++c) {
            for (Eigen::Index r = 0; r < 14; ++r)
                batch(r, c) = rng.next_normal();
            labels[c] = static_cast<double>(rng.next_index(2));
        }
        Gradients grads;
        backward(params, batch, labels, grads);

        auto loss = [&] {
            Gradients scratch;
            return backward(params, batch, labels, scratch);
        };
        for (std::size_t l = 0; l < params.weights.size(); ++l) {
            for (int probe = 0; probe < 8; ++probe) {
                const auto r = static_cast<Eigen::Index>(
                    rng.next_index(static_cast<std::uint64_t>(params.weights[l].rows())));
                const auto c = static_cast<Eigen::Index>(
                    rng.next_index(static_cast<std::uint64_t>(params.weights[l].cols())));
                const double saved = params.weights[l](r, c);
                params.weights[l](r, c) = saved + fd_step;
                const double up = loss();
                params.weights[l](r, c) = saved - fd_step;
                const double down = loss();
                params.weights[l](r, c) = saved;
                const double fd = (up - down) / (2.0 * fd_step);
                const double analytic = grads.weights[l](r, c);
                const double scale = std::max({std::fabs(fd), std::fabs(analytic), 1e-4});
                worst = std::max(worst, std::fabs(fd - analytic) / scale);
            }
        }
    }
    check.require(worst <= 1e-4,
                  "max relative gradient error " + std::to_string(worst) + " <= 1e-4");
    return check.failures == 0;
}

// --------------------------------------------------------------------------
// 5. end-to-end synthetic corpus
// --------------------------------------------------------------------------

std::vector<DatasetRecord> extract_corpus(const std::vector<RawDocument>& docs) {
    std::vector<DatasetRecord> records;
    for (const RawDocument& doc : docs) {
        DatasetRecord rec;
        rec.book_name = doc.title;
        rec.features = extract_features(doc, resources()).features;
        rec.suitability = doc.label;
        records.push_back(std::move(rec));
    }
    return records;
}

double test_accuracy(const std::vector<DatasetRecord>& train_rows,
                     const std::vector<DatasetRecord>& test_rows) {
    NetworkConfig net;
    net.seed = 42;
    TrainConfig tc;
    tc.epochs = 150;
    tc.batch_size = 16;
    tc.shuffle_seed = 43;
    const TrainResult fit = train(train_rows, net, tc);
    const Model model{fit.network, fit.params, fit.scaler};
    long correct = 0;
    for (const DatasetRecord& rec : test_rows)
        correct += (model.predict(rec.features.to_vector()) >= 0.5 ? 1 : 0) ==
                           *rec.suitability
                       ? 1
                       : 0;
    return static_cast<double>(correct) / static_cast<double>(test_rows.size());
}

bool criterion_end_to_end(Checker& check) {
    SynthConfig synth;
    synth.count = 416;
    synth.suitable_fraction = 0.55;
    synth.seed = 2024;
    const std::vector<RawDocument> docs = make_synthetic_corpus(resources(), synth);
    check.require(docs.size() == 416, "416 fabricated documents");

    const std::vector<DatasetRecord> records = extract_corpus(docs);
    const auto [train_rows, test_rows] = stratified_split(records, 0.2, 44);
    check.require(test_rows.size() == 83,
                  "stratified 80/20 split holds out 83 documents (got " +
                      std::to_string(test_rows.size()) + ")");

    const double accuracy = test_accuracy(train_rows, test_rows);
    std::cout << "    model test accuracy " << accuracy << " (threshold 0.85)\n";
    check.require(accuracy >= 0.85, "trained model test accuracy " +
                                        std::to_string(accuracy) + " >= 0.85");

    long baseline_correct = 0;
    for (const DatasetRecord& rec : records)
        if (cop_baseline_classify(rec.features.coefficient_of_positivity, 30.0) ==
            *rec.suitability)
            ++baseline_correct;
    const double baseline_accuracy =
        static_cast<double>(baseline_correct) / static_cast<double>(records.size());
    std::cout << "    threshold-30 baseline accuracy " << baseline_accuracy
              << " (threshold 0.70)\n";
    check.require(baseline_accuracy >= 0.70,
                  "threshold-30 baseline accuracy " + std::to_string(baseline_accuracy) +
                      " >= 0.70");

    // fixed seeds must reproduce the run exactly
    const std::vector<RawDocument> docs2 = make_synthetic_corpus(resources(), synth);
    const std::vector<DatasetRecord> records2 = extract_corpus(docs2);
    check.require(records2.size() == records.size(), "rerun corpus size");
    bool identical = true;
    for (std::size_t i = 0; i < records.size(); ++i)
        identical = identical && records[i] == records2[i];
    check.require(identical, "rerun with fixed seeds reproduces every feature vector");
    const auto [train2, test2] = stratified_split(records2, 0.2, 44);
    check.require(test_accuracy(train2, test2) == accuracy,
                  "rerun reproduces the test accuracy bit for bit");
    return check.failures == 0;
}

// --------------------------------------------------------------------------
// 6. public-domain spot checks
// --------------------------------------------------------------------------

struct SpotCheck {
    const char* file;
    const char* title;
    double expected_sentences;
    double expected_wps;
};

bool criterion_spot_checks(Checker& check) {
    // reference statistics for the five public-domain texts
    const SpotCheck books[] = {
        {"gullivers_travels.txt", "Gulliver's Travels", 2506, 41.88826816},
        {"heidi.txt", "Heidi", 3186, 20.97237916},
        {"pollyanna.txt", "Pollyanna", 3582, 16.91513121},
        {"wizard_of_oz.txt", "The Wonderful Wizard of Oz", 2400, 17.23541667},
        {"happy_prince.txt", "The Happy Prince and Other Tales", 768, 21.38151042},
    };

    bool all_present = true;
    for (const SpotCheck& book : books)
        all_present = all_present && fs::exists(kBooksDir / book.file);
    if (!all_present) {
        check.require(false,
                      "book texts missing under tests/books/; this sandbox has no access to "
                      "gutenberg.org - run scripts/fetch_books.sh on a networked machine");
        return false;
    }

    for (const SpotCheck& book : books) {
        const RawDocument doc = load_document(kBooksDir / book.file);
        const FeatureVector f = extract_features(doc, resources()).features;
        const double sent_err =
            std::fabs(f.total_sentences - book.expected_sentences) / book.expected_sentences;
        const double wps_err =
            std::fabs(f.words_per_sentence - book.expected_wps) / book.expected_wps;
        check.require(sent_err <= 0.15,
                      std::string(book.title) + ": total sentences " +
                          std::to_string(f.total_sentences) + " within 15% of " +
                          std::to_string(book.expected_sentences));
        check.require(wps_err <= 0.15, std::string(book.title) + ": words per sentence " +
                                           std::to_string(f.words_per_sentence) +
                                           " within 15% of " +
                                           std::to_string(book.expected_wps));
        check.require(f.coefficient_of_positivity > 30.0,
                      std::string(book.title) + ": coefficient of positivity " +
                          std::to_string(f.coefficient_of_positivity) + " > 30");
    }
    return check.failures == 0;
}

// --------------------------------------------------------------------------
// 7. example-books fixture baseline
// --------------------------------------------------------------------------

bool criterion_fixture_baseline(Checker& check) {
    const std::vector<DatasetRecord> records =
        read_dataset(kFixturesDir / "example_books.csv");
    check.require(records.size() == 19, "19 fixture rows");

    long correct = 0;
    std::vector<std::string> missed;
    for (const DatasetRecord& rec : records) {
        if (cop_baseline_classify(rec.features.coefficient_of_positivity, 30.0) ==
            *rec.suitability)
            ++correct;
        else
            missed.push_back(rec.book_name + " (cop " +
                             std::to_string(rec.features.coefficient_of_positivity) + ")");
    }
    std::ostringstream missed_list;
    for (const std::string& name : missed)
        missed_list << " " << name;

    // Stated expectation: 18/19 with Chronicles_of_narnia as the only miss.
    // The published per-book values themselves put a second suitable book
    // (my-sweet-orange-tree, 28.32) under the 30 threshold, so this check
    // cannot pass against a faithful fixture; it is asserted as stated
    // rather than weakened. See the failure detail for the actual count.
    check.require(correct == 18, "18/19 correct at threshold 30 (actual " +
                                     std::to_string(correct) + "/19; missed:" +
                                     missed_list.str() + ")");
    check.require(missed.size() == 1 &&
                      missed.front().rfind("Chronicles_of_narnia", 0) == 0,
                  "sole miss is Chronicles_of_narnia (actual misses:" + missed_list.str() +
                      ")");
    return check.failures == 0;
}

// --------------------------------------------------------------------------
// 8. determinism and persistence
// --------------------------------------------------------------------------

bool criterion_determinism(Checker& check) {
    const fs::path dir = scratch_dir("determinism");

    // five fabricated books through the CLI, twice
    SynthConfig synth;
    synth.count = 6;
    synth.suitable_fraction = 0.5;
    synth.seed = 88;
    const auto docs = make_synthetic_corpus(resources(), synth);
    fs::create_directories(dir / "books");
    std::ofstream labels_csv(dir / "labels.csv", std::ios::binary);
    labels_csv << "book_name,suitability\n";
    for (const auto& doc : docs) {
        std::ofstream out(dir / "books" / (doc.title + ".txt"), std::ios::binary);
        out << doc.body << "\n";
        labels_csv << doc.title << ',' << *doc.label << "\n";
    }
    labels_csv.close();
    check.require(run_cli("--seed 7 --out a.csv extract books --labels labels.csv", dir) == 0,
                  "extract run 1");
    check.require(run_cli("--seed 7 --out b.csv extract books --labels labels.csv", dir) == 0,
                  "extract run 2");
    check.require(slurp(dir / "a.csv") == slurp(dir / "b.csv"),
                  "identical seeds and flags give byte-identical datasets");

    check.require(run_cli("--seed 7 train a.csv --model-out m1.json --epochs 30 "
                          "--batch-size 2 --hidden1 6 --hidden2 3 --test-fraction 0.34",
                          dir) == 0,
                  "train run 1");
    check.require(run_cli("--seed 7 train b.csv --model-out m2.json --epochs 30 "
                          "--batch-size 2 --hidden1 6 --hidden2 3 --test-fraction 0.34",
                          dir) == 0,
                  "train run 2");
    check.require(slurp(dir / "m1.json") == slurp(dir / "m2.json"),
                  "identical seeds and flags give byte-identical model files");

    // save -> load -> predict must be bit-equal to the in-memory model
    std::vector<DatasetRecord> records;
    Rng rng(8080);
    for (int i = 0; i < 24; ++i) {
        DatasetRecord rec;
        rec.book_name = "r" + std::to_string(i);
        Vector14 v;
        for (int k = 0; k < 14; ++k)
            v[k] = rng.next_normal();
        v[13] = i % 2 == 0 ? 80.0 : 10.0;
        rec.features = FeatureVector::from_vector(v);
        rec.suitability = i % 2 == 0 ? 1 : 0;
        records.push_back(rec);
    }
    NetworkConfig net;
    net.seed = 5;
    TrainConfig tc;
    tc.epochs = 25;
    tc.batch_size = 6;
    const TrainResult fit = train(records, net, tc);
    const Model model{fit.network, fit.params, fit.scaler};
    save_model(model, dir / "model.json");
    const Model loaded = load_model(dir / "model.json");
    bool all_equal = true;
    for (int trial = 0; trial < 100; ++trial) {
        Vector14 raw;
        for (int k = 0; k < 14; ++k)
            raw[k] = rng.next_normal() * 10.0;
        all_equal = all_equal && model.predict(raw) == loaded.predict(raw);
    }
    check.require(all_equal, "loaded model predicts bit-identically on 100 random vectors");
    return check.failures == 0;
}

// --------------------------------------------------------------------------

struct Criterion {
    int number;
    const char* description;
    bool (*run)(Checker&);
};

const Criterion kCriteria[] = {
    {1, "confusion-matrix metric identities", criterion_metric_identities},
    {2, "sentence-scoring golden oracle and forced overrides", criterion_sentiment_oracle},
    {3, "coefficient-of-positivity exact cases and monotonicity", criterion_cop_properties},
    {4, "analytic gradients vs central finite differences", criterion_gradients},
    {5, "end-to-end synthetic corpus: split 333/83, model and baseline", criterion_end_to_end},
    {6, "public-domain spot checks on five classic books", criterion_spot_checks},
    {7, "example-books fixture at baseline threshold 30", criterion_fixture_baseline},
    {8, "seeded determinism and model persistence", criterion_determinism},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc)
            only = std::atoi(argv[++i]);
    }

    int failures = 0;
    for (const Criterion& criterion : kCriteria) {
        if (only != 0 && criterion.number != only)
            continue;
        Checker check;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(check);
        } catch (const std::exception& err) {
            check.require(false, std::string("exception: ") + err.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number << ": "
                  << criterion.description << " (" << std::fixed << std::setprecision(2)
                  << seconds << "s)\n";
        std::cout.unsetf(std::ios::fixed);
        if (!ok) {
            std::cout << check.log.str();
            ++failures;
        }
    }
    return failures;
}
