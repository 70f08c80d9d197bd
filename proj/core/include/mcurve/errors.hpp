#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcurve {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dates, periods or pillars supplied out of order.
class OrderingError : public Error {
public:
    using Error::Error;
};

/// A date grid cannot be generated from the requested start, end and frequency.
class ScheduleError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The same instrument appears twice in a quote set.
class DuplicateQuoteError : public Error {
public:
    using Error::Error;
};

/// A curve pillar could not be solved for.
class CalibrationError : public Error {
public:
    CalibrationError(std::string instrument, const std::string& what)
        : Error(instrument + ": " + what), instrument_(std::move(instrument)) {}

    const std::string& instrument() const noexcept { return instrument_; }

private:
    std::string instrument_;
};

/// Inconsistent wiring: wrong curve role, missing curve, missing quote.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested maturity lies beyond what a curve was built for.
class CoverageError : public Error {
public:
    using Error::Error;
};

/// Target value is not attainable by the model being inverted.
class InversionError : public Error {
public:
    using Error::Error;
};

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Two dated series expected to share an axis do not.
class AlignmentError : public Error {
public:
    using Error::Error;
};

}  // namespace mcurve
