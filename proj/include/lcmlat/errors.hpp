#ifndef LCMLAT_ERRORS_HPP
#define LCMLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcmlat {

/// Two monomials (or an ideal and a monomial) live over different variable
/// contexts.
class ContextMismatchError : public std::invalid_argument {
public:
    explicit ContextMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// An input violates a documented precondition (zero ideal, non-pure
/// complex, unbounded poset, malformed file, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// A configured size cap was exceeded (generator count, isomorphism search
/// size, subset enumeration width).
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace lcmlat

#endif
