#include "schurdex/errors.hpp"

namespace schurdex {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IncompatibleModulus: return "IncompatibleModulus";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::FieldNotContained: return "FieldNotContained";
        case ErrorKind::NonIntegralRatio: return "NonIntegralRatio";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidPresentation: return "InvalidPresentation";
        case ErrorKind::NotQuadratic: return "NotQuadratic";
        case ErrorKind::CenterNotRational: return "CenterNotRational";
        case ErrorKind::NotCyclotomicForm: return "NotCyclotomicForm";
        case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
        case ErrorKind::ZeroEntry: return "ZeroEntry";
        case ErrorKind::DecompositionFailed: return "DecompositionFailed";
        case ErrorKind::WrongGeneratorCount: return "WrongGeneratorCount";
        case ErrorKind::NonTerminating: return "NonTerminating";
        case ErrorKind::UnsolvedNormEquation: return "UnsolvedNormEquation";
        case ErrorKind::UnsupportedGeneratorCount: return "UnsupportedGeneratorCount";
        case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::InducedNotIrreducible: return "InducedNotIrreducible";
        case ErrorKind::NonIntegralIndicator: return "NonIntegralIndicator";
        case ErrorKind::NotTwoGroup: return "NotTwoGroup";
        case ErrorKind::NormReductionRequired: return "NormReductionRequired";
        case ErrorKind::BrauerCharacterRequired: return "BrauerCharacterRequired";
        case ErrorKind::RouteNotApplicable: return "RouteNotApplicable";
    }
    return "Unknown";
}

}  // namespace schurdex
