#ifndef BOOKSUIT_DATASET_HPP
#define BOOKSUIT_DATASET_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "booksuit/features.hpp"

namespace booksuit {

/// One dataset row. `suitability` is 1 (suitable) / 0 (unsuitable); it may
/// be absent for rows written for prediction input.
struct DatasetRecord {
    std::string book_name;
    FeatureVector features;
    std::optional<int> suitability;

    bool operator==(const DatasetRecord& other) const;
};

/// The exact 16-column header of the dataset CSV.
extern const std::string kDatasetHeader;

/// Parse a dataset CSV. The header must match kDatasetHeader byte for byte;
/// fields follow RFC 4180 quoting. A wrong column count, a non-finite
/// number, or a suitability outside {0, 1, blank} raises ParseError with
/// the row index.
std::vector<DatasetRecord> read_dataset(const std::filesystem::path& path);

/// Write records with the canonical header. Floats are serialized with 17
/// significant digits, so read(write(records)) == records exactly.
void write_dataset(const std::vector<DatasetRecord>& records,
                   const std::filesystem::path& path);
void write_dataset(const std::vector<DatasetRecord>& records, std::ostream& out);

/// 17-significant-digit rendering used by every CSV the tool emits.
std::string format_double(double value);

} // namespace booksuit

#endif
