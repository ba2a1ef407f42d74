#ifndef TWISTOR_ERRORS_HPP
#define TWISTOR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistor {

// Division by the zero scalar or the zero rational function.
struct DivisionByZeroError : std::domain_error {
    explicit DivisionByZeroError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation at a point where a denominator vanishes; message names the denominator.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Coframe wedge vanishes identically, or a sample point sits on the degeneracy locus.
struct DegenerateMetricError : std::domain_error {
    explicit DegenerateMetricError(const std::string& what) : std::domain_error(what) {}
};

// Operation that requires a pure-bidegree form received a mixed one.
struct HomogeneityError : std::invalid_argument {
    explicit HomogeneityError(const std::string& what) : std::invalid_argument(what) {}
};

// Catalog or check lookup with an unregistered name.
struct UnknownNameError : std::invalid_argument {
    explicit UnknownNameError(const std::string& what) : std::invalid_argument(what) {}
};

// Expression-language syntax error with source position (0-based offset).
struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Expression-language type error (form in a denominator, power of a form, ...).
struct ExprTypeError : std::runtime_error {
    ExprTypeError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

}  // namespace twistor

#endif
