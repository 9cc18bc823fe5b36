// booksuit: decide whether plain-text books read as suitable for
// middle-school students. Subcommands cover the whole pipeline: feature
// extraction, training, evaluation, prediction, a hyperparameter sweep and
// the positivity-threshold baseline.

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "booksuit/ann.hpp"
#include "booksuit/dataset.hpp"
#include "booksuit/errors.hpp"
#include "booksuit/eval.hpp"
#include "booksuit/features.hpp"
#include "booksuit/sentiment.hpp"
#include "booksuit/text.hpp"

namespace fs = std::filesystem;
using namespace booksuit;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct GlobalOptions {
    std::string resources_dir = "resources";
    std::string lexicon_path;
    std::string bad_words_path;
    std::string mid_words_path;
    std::string high_words_path;
    std::string stopwords_path;
    std::string abbrev_path;
    std::string irregulars_path;
    std::string dictionary_path;
    std::uint64_t seed = 42;
    double polarity_threshold = kPolarityThreshold;
    std::string out_path;
};

struct ResolvedResources {
    Resources resources;
    std::vector<std::pair<std::string, std::string>> paths; // name -> resolved path
};

ResolvedResources load_resources(const GlobalOptions& opts) {
    const fs::path dir = opts.resources_dir;
    auto resolve = [&](const std::string& override_path, const char* file) {
        return override_path.empty() ? (dir / file).string() : override_path;
    };
    ResolvedResources out;
    const std::string lexicon = resolve(opts.lexicon_path, "sentiment_lexicon.txt");
    const std::string bad = resolve(opts.bad_words_path, "bad_words.txt");
    const std::string mid = resolve(opts.mid_words_path, "middle_school_words.txt");
    const std::string high = resolve(opts.high_words_path, "high_school_words.txt");
    const std::string stop = resolve(opts.stopwords_path, "stopwords.txt");
    const std::string abbrev = resolve(opts.abbrev_path, "abbreviations.txt");
    const std::string irregular = resolve(opts.irregulars_path, "irregular_lemmas.txt");
    const std::string dict = resolve(opts.dictionary_path, "base_dictionary.txt");

    out.resources.lexicon = Lexicon::load(lexicon);
    out.resources.bad_words = WordList::load(bad, "bad-words");
    out.resources.middle_school = WordList::load(mid, "middle-school");
    out.resources.high_school = WordList::load(high, "high-school");
    out.resources.stopwords = WordList::load(stop, "stopwords");
    out.resources.abbreviations = WordList::load(abbrev, "abbreviations");
    out.resources.dictionary = WordList::load(dict, "dictionary");
    out.resources.lemma_exceptions = load_lemma_exceptions(irregular);

    out.paths = {{"lexicon", lexicon},       {"bad-words", bad},   {"mid-words", mid},
                 {"high-words", high},       {"stopwords", stop},  {"abbreviations", abbrev},
                 {"irregular-lemmas", irregular}, {"dictionary", dict}};
    return out;
}

// Reproducibility header on every human-readable report. Timestamps appear
// here and nowhere else, so machine outputs stay byte-identical per seed.
void print_manifest(std::ostream& os, const std::string& command, const GlobalOptions& opts,
                    const std::vector<std::pair<std::string, std::string>>& resource_paths,
                    const std::vector<std::pair<std::string, std::string>>& extras = {}) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32] = "unknown";
    if (std::tm tm{}; gmtime_r(&now, &tm) != nullptr)
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm);
    os << "# booksuit " << kToolVersion << " | command: " << command << " | " << stamp << "\n";
    os << "# seed: " << opts.seed << " | polarity threshold: " << opts.polarity_threshold
       << "\n";
    for (const auto& [name, path] : resource_paths)
        os << "# resource " << name << ": " << path << "\n";
    for (const auto& [key, value] : extras)
        os << "# " << key << ": " << value << "\n";
}

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << v;
    return os.str();
}

std::string opt_fmt(const std::optional<double>& v, int precision = 6) {
    return v ? fmt(*v, precision) : std::string("n/a");
}

void print_metrics_table(std::ostream& os, const ConfusionMatrix& cm,
                         const MetricsReport& report) {
    os << "  counts      tp=" << cm.tp << " fp=" << cm.fp << " fn=" << cm.fn
       << " tn=" << cm.tn << " total=" << cm.total() << "\n";
    os << "  accuracy              " << fmt(report.accuracy) << "\n";
    os << "  precision             " << opt_fmt(report.precision) << "\n";
    os << "  recall                " << opt_fmt(report.recall) << "\n";
    os << "  f-measure             " << opt_fmt(report.f_measure) << "\n";
    os << "  suitable accuracy     " << opt_fmt(report.suitable_accuracy) << "\n";
    os << "  unsuitable accuracy   " << opt_fmt(report.unsuitable_accuracy) << "\n";
}

void write_metrics_csv(const fs::path& path, const ConfusionMatrix& cm,
                       const MetricsReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ResourceError("cannot write metrics file: " + path.string());
    out << "metric,value\n";
    out << "tp," << cm.tp << "\nfp," << cm.fp << "\nfn," << cm.fn << "\ntn," << cm.tn << "\n";
    out << "accuracy," << format_double(report.accuracy) << "\n";
    auto row = [&](const char* name, const std::optional<double>& v) {
        out << name << ',';
        if (v)
            out << format_double(*v);
        out << '\n';
    };
    row("precision", report.precision);
    row("recall", report.recall);
    row("f_measure", report.f_measure);
    row("suitable_accuracy", report.suitable_accuracy);
    row("unsuitable_accuracy", report.unsuitable_accuracy);
}

std::vector<DatasetRecord> read_labeled_dataset(const std::string& path) {
    std::vector<DatasetRecord> records = read_dataset(path);
    if (records.empty())
        throw ContractError("dataset has no rows: " + path);
    for (const auto& rec : records)
        if (!rec.suitability)
            throw ContractError("dataset row '" + rec.book_name +
                                "' has no suitability label");
    return records;
}

// ---------------------------------------------------------------------------
// extract
// ---------------------------------------------------------------------------

struct ExtractArgs {
    std::vector<std::string> inputs;
    int label = -1; // -1 = unset
    std::string labels_csv;
};

std::map<std::string, int> read_labels_sidecar(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ResourceError("cannot open labels file: " + path);
    std::map<std::string, int> labels;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#')
            continue;
        const auto comma = line.rfind(',');
        if (comma == std::string::npos)
            throw ParseError("labels row needs book_name,suitability", lineno);
        const std::string name = line.substr(0, comma);
        const std::string value = line.substr(comma + 1);
        if (name == "book_name")
            continue;
        if (value != "0" && value != "1")
            throw ParseError("suitability must be 0 or 1, got '" + value + "'", lineno);
        labels[name] = value == "1" ? 1 : 0;
    }
    return labels;
}

std::vector<fs::path> collect_book_paths(const std::vector<std::string>& inputs) {
    std::vector<fs::path> paths;
    for (const std::string& input : inputs) {
        const fs::path p(input);
        if (fs::is_directory(p)) {
            for (const auto& entry : fs::directory_iterator(p))
                if (entry.is_regular_file() && entry.path().extension() == ".txt")
                    paths.push_back(entry.path());
        } else {
            paths.push_back(p);
        }
    }
    std::sort(paths.begin(), paths.end(),
              [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });
    return paths;
}

int cmd_extract(const GlobalOptions& opts, const ExtractArgs& args) {
    const ResolvedResources loaded = load_resources(opts);
    const FeatureOptions fopts{opts.polarity_threshold};
    std::map<std::string, int> sidecar;
    if (!args.labels_csv.empty())
        sidecar = read_labels_sidecar(args.labels_csv);

    const std::vector<fs::path> paths = collect_book_paths(args.inputs);
    if (paths.empty())
        throw ContractError("no input books given");

    std::vector<DatasetRecord> records;
    for (const fs::path& path : paths) {
        try {
            const RawDocument doc = load_document(path);
            const ExtractResult extracted = extract_features(doc, loaded.resources, fopts);
            if (extracted.neutral_document)
                std::cerr << "warning: " << path
                          << ": no polar sentences; coefficient of positivity defaulted to 50\n";
            DatasetRecord rec;
            rec.book_name = doc.title;
            rec.features = extracted.features;
            if (args.label != -1)
                rec.suitability = args.label;
            else if (const auto it = sidecar.find(doc.title); it != sidecar.end())
                rec.suitability = it->second;
            records.push_back(std::move(rec));
        } catch (const ResourceError& err) {
            std::cerr << "warning: skipping " << path << ": " << err.what() << "\n";
        } catch (const EmptyDocumentError& err) {
            std::cerr << "warning: skipping " << path << ": " << err.what() << "\n";
        }
    }
    if (records.empty())
        throw ResourceError("all inputs failed; no rows extracted");

    if (opts.out_path.empty()) {
        print_manifest(std::cerr, "extract", opts, loaded.paths);
        write_dataset(records, std::cout);
    } else {
        write_dataset(records, fs::path(opts.out_path));
        print_manifest(std::cout, "extract", opts, loaded.paths,
                       {{"rows", std::to_string(records.size())},
                        {"out", opts.out_path}});
        std::cout << "wrote " << records.size() << " rows to " << opts.out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

struct TrainArgs {
    std::string dataset;
    std::string model_out;
    std::string history_out;
    int hidden1 = 32;
    int hidden2 = 16;
    int epochs = 150;
    int batch_size = 16;
    double learning_rate = 1e-3;
    double test_fraction = 0.2;
};

int cmd_train(const GlobalOptions& opts, const TrainArgs& args) {
    const ResolvedResources loaded = load_resources(opts);
    const std::vector<DatasetRecord> records = read_labeled_dataset(args.dataset);
    const auto [train_rows, test_rows] = stratified_split(records, args.test_fraction,
                                                          opts.seed + 2);

    NetworkConfig net;
    net.hidden1 = args.hidden1;
    net.hidden2 = args.hidden2;
    net.seed = opts.seed;
    TrainConfig tc;
    tc.epochs = args.epochs;
    tc.batch_size = std::min<int>(args.batch_size, static_cast<int>(train_rows.size()));
    tc.learning_rate = args.learning_rate;
    tc.shuffle_seed = opts.seed + 1;

    const TrainResult fit = train(train_rows, net, tc);
    const Model model{fit.network, fit.params, fit.scaler};

    print_manifest(std::cout, "train", opts, loaded.paths,
                   {{"dataset", args.dataset},
                    {"train rows", std::to_string(train_rows.size())},
                    {"test rows", std::to_string(test_rows.size())},
                    {"epochs", std::to_string(tc.epochs)},
                    {"batch size", std::to_string(tc.batch_size)},
                    {"hidden layers",
                     std::to_string(net.hidden1) + "x" + std::to_string(net.hidden2)}});

    if (!fit.scaler.zero_variance_features.empty()) {
        std::cout << "warning: zero-variance features scaled by 1:";
        for (const int f : fit.scaler.zero_variance_features)
            std::cout << ' ' << FeatureVector::names()[static_cast<std::size_t>(f)];
        std::cout << "\n";
    }

    const auto& history = fit.history;
    std::cout << "training history (first/last epochs):\n";
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (i < 3 || i + 3 >= history.size())
            std::cout << "  epoch " << std::setw(4) << history[i].epoch << "  loss "
                      << fmt(history[i].loss) << "  accuracy " << fmt(history[i].accuracy)
                      << "\n";
        else if (i == 3)
            std::cout << "  ...\n";
    }

    auto evaluate_rows = [&](const std::vector<DatasetRecord>& rows, const char* tag) {
        std::vector<double> probs;
        std::vector<int> labels;
        for (const auto& rec : rows) {
            probs.push_back(model.predict(rec.features.to_vector()));
            labels.push_back(*rec.suitability);
        }
        const ConfusionMatrix cm = confusion(probs, labels);
        std::cout << tag << " metrics:\n";
        print_metrics_table(std::cout, cm, metrics(cm));
    };
    evaluate_rows(train_rows, "train");
    evaluate_rows(test_rows, "test");

    if (!args.model_out.empty()) {
        save_model(model, args.model_out);
        std::cout << "model written to " << args.model_out << "\n";
    }
    if (!args.history_out.empty()) {
        std::ofstream out(args.history_out, std::ios::binary);
        if (!out)
            throw ResourceError("cannot write history file: " + args.history_out);
        out << "epoch,loss,accuracy\n";
        for (const auto& epoch : history)
            out << epoch.epoch << ',' << format_double(epoch.loss) << ','
                << format_double(epoch.accuracy) << '\n';
        std::cout << "history written to " << args.history_out << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

int cmd_evaluate(const GlobalOptions& opts, const std::string& model_path,
                 const std::string& dataset_path) {
    const Model model = load_model(model_path);
    const std::vector<DatasetRecord> records = read_labeled_dataset(dataset_path);

    std::vector<double> probs;
    std::vector<int> labels;
    for (const auto& rec : records) {
        probs.push_back(model.predict(rec.features.to_vector()));
        labels.push_back(*rec.suitability);
    }
    const ConfusionMatrix cm = confusion(probs, labels);
    const MetricsReport report = metrics(cm);

    print_manifest(std::cout, "evaluate", opts, {},
                   {{"model", model_path}, {"dataset", dataset_path}});
    std::cout << "evaluation of " << records.size() << " books:\n";
    print_metrics_table(std::cout, cm, report);
    if (!opts.out_path.empty()) {
        write_metrics_csv(opts.out_path, cm, report);
        std::cout << "metrics written to " << opts.out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// predict
// ---------------------------------------------------------------------------

int cmd_predict(const GlobalOptions& opts, const std::string& model_path,
                const std::vector<std::string>& book_paths) {
    const Model model = load_model(model_path);
    const ResolvedResources loaded = load_resources(opts);
    const FeatureOptions fopts{opts.polarity_threshold};

    struct Row {
        std::string name;
        double cop;
        double probability;
        bool neutral;
    };
    std::vector<Row> rows;
    std::vector<fs::path> paths = collect_book_paths(book_paths);
    if (paths.empty())
        throw ContractError("no input books given");
    for (const fs::path& path : paths) {
        const RawDocument doc = load_document(path);
        const ExtractResult extracted = extract_features(doc, loaded.resources, fopts);
        rows.push_back({doc.title, extracted.features.coefficient_of_positivity,
                        model.predict(extracted.features.to_vector()),
                        extracted.neutral_document});
    }

    print_manifest(std::cout, "predict", opts, loaded.paths, {{"model", model_path}});
    std::size_t width = 4;
    for (const Row& row : rows)
        width = std::max(width, row.name.size());
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << "book"
              << std::right << std::setw(10) << "cop" << std::setw(14) << "probability"
              << "  verdict\n";
    bool any_neutral = false;
    std::ostringstream csv;
    csv << "book_name,coefficient_of_positivity,probability,verdict\n";
    for (const Row& row : rows) {
        const char* verdict = row.probability >= 0.5 ? "suitable" : "unsuitable";
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << row.name
                  << std::right << std::setw(10) << fmt(row.cop, 2) << std::setw(14)
                  << fmt(row.probability, 4) << "  " << verdict
                  << (row.neutral ? " *" : "") << "\n";
        any_neutral = any_neutral || row.neutral;
        csv << row.name << ',' << format_double(row.cop) << ','
            << format_double(row.probability) << ',' << verdict << '\n';
    }
    if (any_neutral)
        std::cout << "* no polar sentences found; coefficient of positivity defaulted to 50\n";
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out)
            throw ResourceError("cannot write prediction file: " + opts.out_path);
        out << csv.str();
        std::cout << "predictions written to " << opts.out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string dataset;
    std::vector<int> batch_sizes{8, 16, 32};
    std::vector<int> epochs{50, 100, 150};
    int folds = 5;
    int hidden1 = 32;
    int hidden2 = 16;
};

int cmd_sweep(const GlobalOptions& opts, const SweepArgs& args) {
    const std::vector<DatasetRecord> records = read_labeled_dataset(args.dataset);
    NetworkConfig net;
    net.hidden1 = args.hidden1;
    net.hidden2 = args.hidden2;
    net.seed = opts.seed;
    TrainConfig tc;
    tc.shuffle_seed = opts.seed + 1;

    const GridResult grid =
        grid_search(records, args.batch_sizes, args.epochs, net, tc, args.folds, opts.seed + 3);

    print_manifest(std::cout, "sweep", opts, {},
                   {{"dataset", args.dataset}, {"folds", std::to_string(args.folds)}});
    std::cout << std::right << std::setw(11) << "batch_size" << std::setw(8) << "epochs"
              << std::setw(15) << "mean_accuracy" << std::setw(13) << "sd_accuracy"
              << "\n";
    for (const auto& cell : grid.cells) {
        std::cout << std::setw(11) << cell.batch_size << std::setw(8) << cell.epochs;
        if (cell.failed)
            std::cout << std::setw(15) << "failed" << "  " << cell.error << "\n";
        else
            std::cout << std::setw(15) << fmt(cell.mean_accuracy) << std::setw(13)
                      << fmt(cell.sd_accuracy) << "\n";
    }
    std::cout << "best: batch_size=" << grid.best.batch_size << " epochs=" << grid.best.epochs
              << " mean_accuracy=" << fmt(grid.best.mean_accuracy) << "\n";

    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out)
            throw ResourceError("cannot write sweep file: " + opts.out_path);
        out << "batch_size,epochs,mean_accuracy,sd_accuracy,failed\n";
        for (const auto& cell : grid.cells) {
            out << cell.batch_size << ',' << cell.epochs << ',';
            if (!cell.failed)
                out << format_double(cell.mean_accuracy) << ','
                    << format_double(cell.sd_accuracy) << ",0\n";
            else
                out << ",,1\n";
        }
        std::cout << "sweep table written to " << opts.out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// baseline
// ---------------------------------------------------------------------------

int cmd_baseline(const GlobalOptions& opts, const std::string& dataset_path,
                 double threshold) {
    const std::vector<DatasetRecord> records = read_labeled_dataset(dataset_path);
    long correct = 0;
    for (const auto& rec : records)
        if (cop_baseline_classify(rec.features.coefficient_of_positivity, threshold) ==
            *rec.suitability)
            ++correct;
    const double accuracy = static_cast<double>(correct) / static_cast<double>(records.size());

    print_manifest(std::cout, "baseline", opts, {},
                   {{"dataset", dataset_path}, {"threshold", fmt(threshold, 2)}});
    std::cout << "positivity-threshold baseline @ " << fmt(threshold, 2) << ": " << correct
              << "/" << records.size() << " correct, accuracy " << fmt(accuracy) << "\n";
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out)
            throw ResourceError("cannot write baseline file: " + opts.out_path);
        out << "metric,value\n";
        out << "threshold," << format_double(threshold) << "\n";
        out << "total," << records.size() << "\n";
        out << "correct," << correct << "\n";
        out << "accuracy," << format_double(accuracy) << "\n";
        std::cout << "baseline written to " << opts.out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"book suitability screener for middle-school readers"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--resources", opts.resources_dir, "resource directory")
        ->capture_default_str();
    app.add_option("--lexicon", opts.lexicon_path, "sentiment lexicon TSV override");
    app.add_option("--bad-words", opts.bad_words_path, "bad-words list override");
    app.add_option("--mid-words", opts.mid_words_path, "middle-school list override");
    app.add_option("--high-words", opts.high_words_path, "high-school list override");
    app.add_option("--stopwords", opts.stopwords_path, "stopword list override");
    app.add_option("--abbreviations", opts.abbrev_path, "abbreviation table override");
    app.add_option("--irregular-lemmas", opts.irregulars_path, "irregular-lemma table override");
    app.add_option("--dictionary", opts.dictionary_path, "base-form dictionary override");
    app.add_option("--seed", opts.seed, "master seed for every stochastic step")
        ->capture_default_str();
    app.add_option("--polarity-threshold", opts.polarity_threshold,
                   "compound cutoff separating polar from neutral sentences")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "write machine-readable output to this file");

    ExtractArgs extract_args;
    CLI::App* extract = app.add_subcommand("extract", "book texts -> dataset rows");
    extract->add_option("inputs", extract_args.inputs, ".txt files or directories")
        ->required();
    extract->add_option("--label", extract_args.label, "suitability for every input (0 or 1)")
        ->check(CLI::Range(0, 1));
    extract->add_option("--labels", extract_args.labels_csv,
                        "sidecar CSV book_name,suitability");

    TrainArgs train_args;
    CLI::App* train_cmd = app.add_subcommand("train", "fit the classifier on a dataset");
    train_cmd->add_option("dataset", train_args.dataset, "dataset CSV")->required();
    train_cmd->add_option("--model-out", train_args.model_out, "write the model JSON here");
    train_cmd->add_option("--history-out", train_args.history_out, "per-epoch CSV");
    train_cmd->add_option("--hidden1", train_args.hidden1, "first hidden width")
        ->check(CLI::PositiveNumber)->capture_default_str();
    train_cmd->add_option("--hidden2", train_args.hidden2, "second hidden width")
        ->check(CLI::PositiveNumber)->capture_default_str();
    train_cmd->add_option("--epochs", train_args.epochs, "training epochs")
        ->check(CLI::PositiveNumber)->capture_default_str();
    train_cmd->add_option("--batch-size", train_args.batch_size, "mini-batch size")
        ->check(CLI::PositiveNumber)->capture_default_str();
    train_cmd->add_option("--learning-rate", train_args.learning_rate, "Adam step size")
        ->capture_default_str();
    train_cmd->add_option("--test-fraction", train_args.test_fraction,
                          "held-out fraction for the stratified split")
        ->check(CLI::Range(0.0, 0.9))->capture_default_str();

    std::string eval_model;
    std::string eval_dataset;
    CLI::App* evaluate = app.add_subcommand("evaluate", "score a model against a dataset");
    evaluate->add_option("model", eval_model, "model JSON")->required();
    evaluate->add_option("dataset", eval_dataset, "dataset CSV")->required();

    std::string predict_model;
    std::vector<std::string> predict_books;
    CLI::App* predict = app.add_subcommand("predict", "per-book verdicts from raw texts");
    predict->add_option("model", predict_model, "model JSON")->required();
    predict->add_option("books", predict_books, ".txt files or directories")->required();

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "cross-validated hyperparameter grid");
    sweep->add_option("dataset", sweep_args.dataset, "dataset CSV")->required();
    sweep->add_option("--batch-sizes", sweep_args.batch_sizes, "batch sizes to try")
        ->delimiter(',')->capture_default_str();
    sweep->add_option("--epochs", sweep_args.epochs, "epoch counts to try")
        ->delimiter(',')->capture_default_str();
    sweep->add_option("--folds", sweep_args.folds, "cross-validation folds")
        ->check(CLI::Range(2, 20))->capture_default_str();
    sweep->add_option("--hidden1", sweep_args.hidden1, "first hidden width")
        ->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--hidden2", sweep_args.hidden2, "second hidden width")
        ->check(CLI::PositiveNumber)->capture_default_str();

    std::string baseline_dataset;
    double baseline_threshold = 30.0;
    CLI::App* baseline = app.add_subcommand("baseline",
                                            "positivity-threshold classifier accuracy");
    baseline->add_option("dataset", baseline_dataset, "dataset CSV")->required();
    baseline->add_option("--threshold", baseline_threshold, "percent cutoff")
        ->check(CLI::Range(0.0, 100.0))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (extract->parsed())
            return cmd_extract(opts, extract_args);
        if (train_cmd->parsed())
            return cmd_train(opts, train_args);
        if (evaluate->parsed())
            return cmd_evaluate(opts, eval_model, eval_dataset);
        if (predict->parsed())
            return cmd_predict(opts, predict_model, predict_books);
        if (sweep->parsed())
            return cmd_sweep(opts, sweep_args);
        if (baseline->parsed())
            return cmd_baseline(opts, baseline_dataset, baseline_threshold);
    } catch (const ResourceError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
