#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycert {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root-to-leaf path into a term: App-left, App-right or Lam-body.
enum class Direction { Left, Right, Body };
using Position = std::vector<Direction>;

std::string to_string(const Position& position);

class TypeError : public Error {
public:
    enum class Kind { UnboundVariable, UnknownSymbol, ApplicationMismatch };

    TypeError(Kind kind, Position where, const std::string& message)
        : Error(message), kind_(kind), position_(std::move(where)) {}

    Kind kind() const { return kind_; }
    const Position& position() const { return position_; }

private:
    Kind kind_;
    Position position_;
};

/// Failures while evaluating polynomials or interpreting terms.
class SemanticError : public Error {
public:
    enum class Kind { NonBaseResult, UnsupportedShape, MissingBinding, IllTyped };

    SemanticError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public Error {
public:
    ParseError(SourceLocation where, std::vector<std::string> expected, std::string found);

    const SourceLocation& location() const { return where_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    SourceLocation where_;
    std::vector<std::string> expected_;
    std::string found_;
};

class ElaborationError : public Error {
public:
    enum class Kind {
        UnknownSymbolInInterpretation,
        UnknownParameter,
        UnificationFailure,
        ArityMismatch,
        MissingInterpretation,
        DuplicateDeclaration,
        DuplicateInterpretation,
        MalformedPolynomial,
    };

    ElaborationError(Kind kind, SourceLocation where, const std::string& message);

    Kind kind() const { return kind_; }
    const SourceLocation& location() const { return where_; }

private:
    Kind kind_;
    SourceLocation where_;
};

}  // namespace polycert
