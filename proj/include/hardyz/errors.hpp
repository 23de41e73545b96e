#pragma once

#include <stdexcept>
#include <string>

namespace hardyz {

// Precondition / domain violations (CLI exit code 1).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation-budget exhaustion in adaptive quadrature (CLI exit code 2).
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Overflow that would otherwise surface as inf/nan.
class OverflowError : public std::range_error {
public:
    explicit OverflowError(const std::string& what) : std::range_error(what) {}
};

} // namespace hardyz
