#ifndef REUSESP_ERROR_HPP
#define REUSESP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace reusesp {

enum class ErrorCode {
    Parse = 1,
    Validation = 2,
    InvalidPath = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    Internal = 6,
};

// Library-wide exception. `line` is 1-based for parser errors, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          code_(code), line_(line) {}

    ErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    ErrorCode code_;
    int line_;
};

} // namespace reusesp

#endif
