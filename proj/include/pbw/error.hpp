#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

/// Domain error: bad input, violated precondition, insufficient truncation.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse error with source position.
struct ParseError : Error {
    std::string file;
    int line = 0;
    int col = 0;
    ParseError(std::string file_, int line_, int col_, const std::string& msg)
        : Error(file_ + ":" + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          file(std::move(file_)), line(line_), col(col_) {}
};

// Internal invariant checks throw std::logic_error: a failure here is a bug,
// never a user error.
inline void internal_check(bool ok, const char* what) {
    if (!ok)
        throw std::logic_error(std::string("internal error: ") + what);
}

} // namespace pbw
