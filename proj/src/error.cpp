#include "ct/error.hpp"

namespace ct {

const char* err_name(Err e) {
    switch (e) {
    case Err::EmptyThread: return "EmptyThread";
    case Err::NoSource: return "NoSource";
    case Err::MultipleSources: return "MultipleSources";
    case Err::DuplicatePostId: return "DuplicatePostId";
    case Err::MissingLabel: return "MissingLabel";
    case Err::DuplicateAnnotation: return "DuplicateAnnotation";
    case Err::UnknownCode: return "UnknownCode";
    case Err::EmptyCodeSet: return "EmptyCodeSet";
    case Err::EmptyInput: return "EmptyInput";
    case Err::InsufficientRows: return "InsufficientRows";
    case Err::AllColumnsOmitted: return "AllColumnsOmitted";
    case Err::InvalidDf: return "InvalidDf";
    case Err::MismatchedPredictors: return "MismatchedPredictors";
    case Err::MalformedLine: return "MalformedLine";
    case Err::HeadOutOfRange: return "HeadOutOfRange";
    case Err::SingleClassInput: return "SingleClassInput";
    case Err::NonFiniteFeature: return "NonFiniteFeature";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::TooFewSamples: return "TooFewSamples";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::MalformedCsv: return "MalformedCsv";
    case Err::MalformedCodes: return "MalformedCodes";
    case Err::UnknownPostId: return "UnknownPostId";
    case Err::MissingParses: return "MissingParses";
    case Err::EmptyLexicon: return "EmptyLexicon";
    case Err::VersionMismatch: return "VersionMismatch";
    case Err::BadConfig: return "BadConfig";
    case Err::IoFailure: return "IoFailure";
    }
    return "UnknownError";
}

} // namespace ct
