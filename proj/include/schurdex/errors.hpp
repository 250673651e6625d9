#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurdex {

enum class ErrorKind {
    IncompatibleModulus,
    NotCoprime,
    FieldNotContained,
    NonIntegralRatio,
    ParseError,
    InvalidPresentation,
    NotQuadratic,
    CenterNotRational,
    NotCyclotomicForm,
    UnsupportedIndex,
    ZeroEntry,
    DecompositionFailed,
    WrongGeneratorCount,
    NonTerminating,
    UnsolvedNormEquation,
    UnsupportedGeneratorCount,
    InconsistentPresentation,
    GroupTooLarge,
    InducedNotIrreducible,
    NonIntegralIndicator,
    NotTwoGroup,
    NormReductionRequired,
    BrauerCharacterRequired,
    RouteNotApplicable,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failures also record the byte offset where the grammar broke.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error(ErrorKind::ParseError,
                "at position " + std::to_string(position) + ": expected " + expected),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace schurdex
