#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Base class for all numeric failures; CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested at the pole s = 1.
class PoleError : public NumericError {
public:
    explicit PoleError(const std::string& msg) : NumericError(msg) {}
};

// The requested absolute tolerance cannot be met within the term budget.
class AccuracyError : public NumericError {
public:
    explicit AccuracyError(const std::string& msg) : NumericError(msg) {}
};

// Argument outside the mathematical domain of the operation.
class DomainError : public NumericError {
public:
    explicit DomainError(const std::string& msg) : NumericError(msg) {}
};

// Bad command line or config input; CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zetalab
