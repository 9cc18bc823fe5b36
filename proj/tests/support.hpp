#ifndef BOOKSUIT_TESTS_SUPPORT_HPP
#define BOOKSUIT_TESTS_SUPPORT_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "booksuit/resources.hpp"

namespace testsupport {

inline std::filesystem::path source_dir() {
    return std::filesystem::path(BOOKSUIT_SOURCE_DIR);
}

inline std::filesystem::path resources_dir() {
    return source_dir() / "resources";
}

inline std::filesystem::path fixtures_dir() {
    return source_dir() / "tests";
}

/// Shared read-only resources, loaded once per test binary.
inline const booksuit::Resources& resources() {
    static const booksuit::Resources res = booksuit::Resources::load_dir(resources_dir());
    return res;
}

/// Fresh scratch directory under the build tree.
inline std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::path(BOOKSUIT_BINARY_DIR) / "scratch" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

} // namespace testsupport

#endif
