#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Base for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph or coloring text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error
{
public:
    ParseError(const std::string & what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An operation was called on input outside its domain (disconnected graph,
/// k too small, too many colors, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Something that should be impossible happened. Carries enough text to
/// reproduce.
class InternalFault : public Error
{
public:
    using Error::Error;
};

} // namespace rainbow
