#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed DSL text. `position` is a byte offset into the input.
struct DslError : Error {
    DslError(std::string msg, std::size_t position)
        : Error(std::move(msg)), position(position) {}
    std::size_t position = 0;
};

// AST does not match any of the three template shapes.
struct ShapeError : Error {
    using Error::Error;
};

// An automaton construction exceeded the configured state cap.
struct StateLimitError : Error {
    using Error::Error;
};

// No accepted string exists within the requested length window.
struct SampleWindowError : Error {
    using Error::Error;
};

// Rejection sampling (or a whole pipeline stage) ran out of attempts.
struct BudgetError : Error {
    using Error::Error;
};

// Every production at a choice point was filtered to zero weight.
struct DeadEndError : Error {
    using Error::Error;
};

// Ill-typed token prefix. `index` is the offending token's position.
struct TokenError : Error {
    TokenError(std::string msg, std::size_t index, std::string token)
        : Error(std::move(msg)), index(index), token(std::move(token)) {}
    std::size_t index = 0;
    std::string token;
};

// Bad record in a dataset file. `line_no` is 1-based.
struct SchemaError : Error {
    SchemaError(std::string msg, std::size_t line_no)
        : Error(std::move(msg)), line_no(line_no) {}
    std::size_t line_no = 0;
};

} // namespace streg
