#ifndef BOOKSUIT_ERRORS_HPP
#define BOOKSUIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace booksuit {

/// A file or directory could not be opened or read.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// File contents are malformed. Carries a 1-based line/row position when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

/// A caller violated a documented precondition or invariant.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// A document produced no sentences; no feature vector is fabricated.
class EmptyDocumentError : public ContractError {
public:
    explicit EmptyDocumentError(const std::string& what) : ContractError(what) {}
};

} // namespace booksuit

#endif
