#ifndef TELESUM_ERRORS_HPP
#define TELESUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace telesum {

struct TelesumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problem-file syntax error; carries a 1-based position.
struct ParseError : TelesumError {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int l, int c)
        : TelesumError(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
          line(l), column(c) {}
};

struct SemanticError : TelesumError {
    using TelesumError::TelesumError;
};

struct NotDFiniteError : TelesumError {
    using TelesumError::TelesumError;
};

struct SingularShiftMatrixError : TelesumError {
    using TelesumError::TelesumError;
};

struct NotCoprimeError : TelesumError {
    using TelesumError::TelesumError;
};

struct ClassMismatchError : TelesumError {
    using TelesumError::TelesumError;
};

struct NoCyclicVectorError : TelesumError {
    using TelesumError::TelesumError;
};

struct InternalError : TelesumError {
    using TelesumError::TelesumError;
};

} // namespace telesum

#endif
