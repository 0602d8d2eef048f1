#ifndef CZSPLIT_ERRORS_HPP
#define CZSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace czsplit {

/// Violated precondition or unusable input (bad field spec, division by
/// zero, mismatched fields, unparseable polynomial, ...). The message names
/// the violated precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A state that the underlying theory proves unreachable. Seeing one of
/// these means the implementation is wrong, not the input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace czsplit

#endif
