#include "booksuit/document.hpp"

#include <fstream>
#include <sstream>

#include "booksuit/errors.hpp"

namespace booksuit {

RawDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ResourceError("cannot open book file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    RawDocument doc;
    doc.id = path.string();
    doc.title = path.stem().string();
    doc.body = buf.str();
    return doc;
}

} // namespace booksuit
