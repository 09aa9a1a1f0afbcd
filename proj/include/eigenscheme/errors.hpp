#pragma once

#include <stdexcept>
#include <string>

namespace eigenscheme {

// Every library failure derives from Error so the CLI can map it to an exit
// code with a single catch.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& m) : Error("dimension", m) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& m) : Error("invalid-argument", m) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& m) : Error("validation", m) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& m) : Error("parse", m) {}
};

/// The characteristic polynomial does not split over the rationals.
class UnsupportedField : public Error {
public:
    explicit UnsupportedField(const std::string& m) : Error("unsupported-field", m) {}
};

/// Buchberger pair budget exhausted.
class GuardExceeded : public Error {
public:
    explicit GuardExceeded(const std::string& m) : Error("guard", m) {}
};

class DegenerateSample : public Error {
public:
    explicit DegenerateSample(const std::string& m) : Error("degenerate-sample", m) {}
};

class InsufficientSample : public Error {
public:
    explicit InsufficientSample(const std::string& m) : Error("insufficient-sample", m) {}
};

class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& m) : Error("inconsistent", m) {}
};

}  // namespace eigenscheme
