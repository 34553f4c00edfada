#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sadic {

/// Base class for failures of the combinatorial machinery itself
/// (incompatible inputs, unparseable patterns, exhausted budgets).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A substitution (pattern) does not satisfy the extent-agreement condition
/// on the given input; the message names the offending cells.
class IncompatibleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An enumeration hit its caller-supplied budget. Never converted into a
/// partial result silently; `partial_count` reports how far it got.
class BudgetExceededError : public DomainError {
public:
    BudgetExceededError(const std::string& what, std::size_t partial)
        : DomainError(what), partial_count(partial) {}

    std::size_t partial_count = 0;
};

/// Malformed textual input: system documents, pattern files, inline grids.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sadic
