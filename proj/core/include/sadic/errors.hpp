#pragma once

#include <stdexcept>
#include <string>

namespace sadic {

/// Raised when an internal invariant that construction should have
/// enforced turns out to be violated (e.g. a zero column in a telescoped
/// incidence matrix of a non-erasing sequence).
class InvalidStateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An operation would exceed its expansion budget. Carries the predicted
/// number of symbols so the caller can decide how far to back off.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(std::string what, std::string predicted_symbols)
        : std::runtime_error(std::move(what)),
          predicted_symbols_(std::move(predicted_symbols)) {}

    /// Decimal string; the prediction can exceed any machine integer.
    const std::string& predicted_symbols() const { return predicted_symbols_; }

private:
    std::string predicted_symbols_;
};

/// A letter vector admits no nonnegative lift at some level of the tower.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(int level, std::string what)
        : std::runtime_error(std::move(what)), level_(level) {}

    int level() const { return level_; }

private:
    int level_;
};

/// The primitivity precondition of the power-iteration oracle failed.
class NotPrimitiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Power iteration did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration or input text. Carries a location string
/// ("line 3", "sequence.period", ...) for diagnostics.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what),
          where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

} // namespace sadic
