#pragma once

#include <stdexcept>
#include <string>

namespace screenkit {

// Malformed content in an input file; the message starts with "path:line:".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, long line, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + message), line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

// Cross-record inconsistency: dangling references, duplicate ids, or record
// constraints that only hold relative to other records.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace screenkit
