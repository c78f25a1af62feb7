#ifndef WCP_ERROR_HPP
#define WCP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wcp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shapes of two operands do not fit (composition, tensor wiring, JSON sizes).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Scalars from different fields were combined, or a field descriptor is invalid.
class FieldError : public Error {
public:
    using Error::Error;
};

/// A linear system has no solution.
class InconsistentSystem : public Error {
public:
    InconsistentSystem(std::size_t column, const std::string& what)
        : Error(what), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Input that cannot be decoded; `pointer` is a JSON pointer to the offending field.
class ParseError : public Error {
public:
    ParseError(std::string pointer, const std::string& what)
        : Error(pointer.empty() ? what : pointer + ": " + what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

} // namespace wcp

#endif
