#ifndef PHX_ERROR_HPP
#define PHX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace phx {

enum class ErrorCode {
    InvalidRoot,
    DuplicateName,
    DuplicateLabel,
    InvalidName,
    UnknownCriterion,
    UnknownBranch,
    UnknownObject,
    DuplicateObject,
    ValidationError,
    ExpansionTooLarge,
    EmptyCollection,
    UnboundedLeafPool,
    InconsistentAssignment,
    StorageRuleViolation,
    SyntaxError,
    IoError,
    FormatError,
    VersionUnsupported,
    CorruptDocument,
    TooLarge,
};

/// Stable lower-case name used by the CLI ("unknown-criterion", ...).
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure; `position` is a byte offset into the input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error(ErrorCode::SyntaxError,
                "syntax error at " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Document load failure; `line` is 1-based.
class FormatError : public Error {
public:
    FormatError(std::size_t line, const std::string& reason)
        : Error(ErrorCode::FormatError, "line " + std::to_string(line) + ": " + reason),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace phx

#endif
