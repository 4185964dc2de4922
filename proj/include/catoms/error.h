#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catoms {

enum class Errc {
    parse,              ///< syntax violation in program text
    semantic,           ///< well-formed text that violates a c-atom or rule invariant
    usage,              ///< bad command-line arguments or unknown atom names
    cap_exceeded,       ///< an enumeration would exceed the configured budget
    not_basic,          ///< operation needs elementary (or bottom) heads
    not_basic_positive, ///< operation needs a basic program without naf-atoms
    not_positive,       ///< operation needs a program without naf-atoms
    not_monotone,       ///< operation needs every c-atom to be monotone
    unmapped_atom,      ///< level mapping does not cover the queried atoms
    unsupported,        ///< semantics not defined for this program class
};

const char* to_string(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

struct SourceSpan {
    std::size_t line      = 1; ///< 1-based
    std::size_t column    = 1; ///< 1-based, in bytes
    std::size_t begin     = 0; ///< byte offset of first character
    std::size_t end       = 0; ///< byte offset one past the last character
};

class ParseError : public Error {
public:
    ParseError(SourceSpan span, const std::string& msg, Errc code = Errc::parse);
    [[nodiscard]] const SourceSpan& span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

} // namespace catoms
