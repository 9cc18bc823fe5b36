#ifndef BOOKSUIT_DOCUMENT_HPP
#define BOOKSUIT_DOCUMENT_HPP

#include <filesystem>
#include <optional>
#include <string>

namespace booksuit {

/// One book: raw UTF-8 text plus optional ground-truth suitability
/// (1 = suitable for middle-school readers, 0 = not).
struct RawDocument {
    std::string id;
    std::string title;
    std::string body;
    std::optional<int> label;
};

/// Read a `.txt` file as a document. `id` is the path as given, `title` the
/// file stem. Throws ResourceError when unreadable; an all-whitespace file
/// yields an empty body (rejected later by feature extraction).
RawDocument load_document(const std::filesystem::path& path);

} // namespace booksuit

#endif
