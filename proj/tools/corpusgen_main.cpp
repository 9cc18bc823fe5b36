// corpusgen: fabricate a labeled synthetic corpus as .txt files plus a
// labels.csv sidecar, for exercising the pipeline when no labeled book
// collection is at hand.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "booksuit/errors.hpp"
#include "booksuit/resources.hpp"
#include "booksuit/synth.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"synthetic labeled corpus generator"};
    std::string resources_dir = "resources";
    std::string out_dir = "synthetic_corpus";
    booksuit::SynthConfig config;
    app.add_option("--resources", resources_dir, "resource directory")->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--count", config.count, "number of documents")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--suitable-fraction", config.suitable_fraction,
                   "share of suitable documents")
        ->check(CLI::Range(0.0, 1.0))->capture_default_str();
    app.add_option("--seed", config.seed, "generator seed")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        const booksuit::Resources resources = booksuit::Resources::load_dir(resources_dir);
        const auto docs = booksuit::make_synthetic_corpus(resources, config);

        fs::create_directories(out_dir);
        std::ofstream labels(fs::path(out_dir) / "labels.csv", std::ios::binary);
        labels << "book_name,suitability\n";
        for (const auto& doc : docs) {
            std::ofstream out(fs::path(out_dir) / (doc.title + ".txt"), std::ios::binary);
            out << doc.body << "\n";
            labels << doc.title << ',' << *doc.label << "\n";
        }
        std::cout << "wrote " << docs.size() << " books and labels.csv to " << out_dir
                  << "\n";
        return 0;
    } catch (const booksuit::ResourceError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
