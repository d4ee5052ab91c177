#pragma once
// Typed error codes shared across the pipeline. Every throwing operation
// raises ct::Error with one of these codes so callers and tests can match
// on the condition rather than the message text.

#include <stdexcept>
#include <string>

namespace ct {

enum class Err {
    // thread_core
    EmptyThread,
    NoSource,
    MultipleSources,
    DuplicatePostId,
    MissingLabel,
    // annotation
    DuplicateAnnotation,
    UnknownCode,
    EmptyCodeSet,
    // regression
    EmptyInput,
    InsufficientRows,
    AllColumnsOmitted,
    InvalidDf,
    MismatchedPredictors,
    // conllu
    MalformedLine,
    HeadOutOfRange,
    // svm / eval
    SingleClassInput,
    NonFiniteFeature,
    DimensionMismatch,
    TooFewSamples,
    LengthMismatch,
    // cli / io
    MalformedCsv,
    MalformedCodes,
    UnknownPostId,
    MissingParses,
    EmptyLexicon,
    VersionMismatch,
    BadConfig,
    IoFailure,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

} // namespace ct
