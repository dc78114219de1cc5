#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace branchkit {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad partition, weight of the wrong rank, non-dominant weight.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class RankMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class RangeError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A closed-form rule was asked about a subalgebra type it does not cover.
class ShapeError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class UnsupportedError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NoPivotError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Checked fixed-width arithmetic overflowed.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// A weight multiset that cannot be the weight system of an sl2 representation.
class CorruptMultiset : public Error {
public:
    using Error::Error;
};

/// An enumeration exceeded its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Internal invariant violated (negative multiplicity, method disagreement).
/// Carries the chain of recursion keys that led to the failure, innermost first.
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error(what) {}

    void push_context(std::string key) { trace_.push_back(std::move(key)); }
    const std::vector<std::string>& trace() const noexcept { return trace_; }

private:
    std::vector<std::string> trace_;
};

} // namespace branchkit
