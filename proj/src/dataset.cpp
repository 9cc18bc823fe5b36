#include "booksuit/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "booksuit/errors.hpp"

namespace booksuit {

const std::string kDatasetHeader =
    "book_name,pos_sentences,neg_sentences,total_sentences,pos_sent_to_total,"
    "pos_sent_to_neg,pos_words,neg_words,total_words,pos_words_to_total,"
    "pos_words_to_neg,words_per_sentence,midschool_word_ratio,"
    "highschool_word_ratio,coefficient_of_positivity,suitability";

bool DatasetRecord::operator==(const DatasetRecord& other) const {
    return book_name == other.book_name && suitability == other.suitability &&
           features.to_vector() == other.features.to_vector();
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"')
            out += "\"\"";
        else
            out += ch;
    }
    out += '"';
    return out;
}

// One CSV line -> fields, honoring RFC 4180 quotes.
std::vector<std::string> split_csv_line(const std::string& line, long row) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    if (quoted)
        throw ParseError("unterminated quote in dataset row", row);
    fields.push_back(field);
    return fields;
}

double parse_finite(const std::string& field, long row) {
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || !std::isfinite(value))
        throw ParseError("non-finite or malformed number '" + field + "'", row);
    return value;
}

} // namespace

std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ResourceError("cannot open dataset: " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw ParseError("dataset is empty (missing header): " + path.string(), 1);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kDatasetHeader)
        throw ParseError("dataset header does not match the canonical 16-column header", 1);

    std::vector<DatasetRecord> records;
    long row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r")
            continue;
        const std::vector<std::string> fields = split_csv_line(line, row);
        if (fields.size() != 16)
            throw ParseError("expected 16 columns, found " + std::to_string(fields.size()),
                             row);
        DatasetRecord rec;
        rec.book_name = fields[0];
        Vector14 v;
        for (int i = 0; i < FeatureVector::kCount; ++i)
            v[i] = parse_finite(fields[static_cast<std::size_t>(i) + 1], row);
        rec.features = FeatureVector::from_vector(v);
        const std::string& suit = fields[15];
        if (suit.empty()) {
            rec.suitability = std::nullopt;
        } else if (suit == "0" || suit == "1") {
            rec.suitability = suit == "1" ? 1 : 0;
        } else {
            throw ParseError("suitability must be 0, 1 or blank, got '" + suit + "'", row);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_dataset(const std::vector<DatasetRecord>& records, std::ostream& out) {
    out << kDatasetHeader << '\n';
    for (const DatasetRecord& rec : records) {
        out << csv_escape(rec.book_name);
        const Vector14 v = rec.features.to_vector();
        for (int i = 0; i < FeatureVector::kCount; ++i)
            out << ',' << format_double(v[i]);
        out << ',';
        if (rec.suitability)
            out << *rec.suitability;
        out << '\n';
    }
}

void write_dataset(const std::vector<DatasetRecord>& records,
                   const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ResourceError("cannot write dataset: " + path.string());
    write_dataset(records, out);
    if (!out)
        throw ResourceError("write failed: " + path.string());
}

} // namespace booksuit
