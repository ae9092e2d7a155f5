#ifndef DISCKIT_ERROR_HPP_
#define DISCKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disckit {

enum class ErrorKind {
    Parse,      // malformed expression or ring text
    Ring,       // ring mismatch, unsupported ring or ring map
    Parameter,  // argument outside its documented range
    Budget,     // enumeration would exceed the configured budget
    Internal,   // broken invariant (e.g. an inexact "exact" division)
};

/* Every failure raised by the library is an Error. The kind decides the
 * CLI exit code; parse errors additionally carry a 1-based position. */
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Error(ErrorKind kind, const std::string& what, std::size_t line,
          std::size_t column)
        : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    bool has_position() const noexcept { return line_ != 0; }

  private:
    ErrorKind kind_;
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Ring: return "ring";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Internal: return "internal";
    }
    return "internal";
}

}  // namespace disckit

#endif  // DISCKIT_ERROR_HPP_
